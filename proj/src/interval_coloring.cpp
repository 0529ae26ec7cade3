#include "geoextract/interval_coloring.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace geoextract::intervals {
namespace {

int other(int color) { return color == 1 ? 2 : 1; }

bool subset_of(const Interval& inner, const Rational& lo, const Rational& hi) {
    return lo <= inner.a && inner.b <= hi;
}

[[noreturn]] void invariant(const std::string& what) {
    throw Error(ErrorKind::AlgorithmInvariant, "interval coloring: " + what);
}

}  // namespace

std::vector<IndexSet> connected_components(std::span<const Interval> intervals) {
    std::vector<std::size_t> order(intervals.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
        if (intervals[l].a != intervals[r].a) return intervals[l].a < intervals[r].a;
        return l < r;
    });
    std::vector<IndexSet> components;
    std::optional<Rational> reach;
    for (std::size_t i : order) {
        if (!reach || intervals[i].a > *reach) {
            components.emplace_back();
            reach = intervals[i].b;
        }
        components.back().push_back(i);
        if (intervals[i].b > *reach) reach = intervals[i].b;
    }
    for (auto& c : components) std::sort(c.begin(), c.end());
    return components;
}

KeyChain build_key_chain(std::span<const Interval> intervals, const IndexSet& component) {
    if (component.empty()) invariant("empty component");
    KeyChain chain{component, {}};

    std::size_t first = component.front();
    for (std::size_t i : component) {
        const auto& cur = intervals[first];
        const auto& cand = intervals[i];
        if (cand.a < cur.a || (cand.a == cur.a && cand.b > cur.b)) first = i;
    }
    chain.keys.push_back(first);

    while (true) {
        const Interval& key = intervals[chain.keys.back()];
        std::optional<std::size_t> next;
        for (std::size_t i : component) {
            const auto& cand = intervals[i];
            if (cand.a < key.a || cand.a > key.b || cand.b <= key.b) continue;
            if (!next) {
                next = i;
                continue;
            }
            const auto& best = intervals[*next];
            if (cand.b > best.b || (cand.b == best.b && cand.a < best.a)) next = i;
        }
        if (!next) break;
        chain.keys.push_back(*next);
    }

    // Only consecutive keys intersect.
    for (std::size_t j = 0; j + 2 < chain.keys.size(); ++j) {
        if (intervals[chain.keys[j + 2]].a <= intervals[chain.keys[j]].b) {
            invariant("non-consecutive keys intersect");
        }
    }
    // The keys span the component's union.
    Rational lo = intervals[component.front()].a;
    Rational hi = intervals[component.front()].b;
    for (std::size_t i : component) {
        lo = std::min(lo, intervals[i].a);
        hi = std::max(hi, intervals[i].b);
    }
    if (intervals[chain.keys.front()].a != lo || intervals[chain.keys.back()].b != hi) {
        invariant("key chain does not span its component");
    }
    return chain;
}

std::vector<int> color_intervals(std::span<const Interval> intervals) {
    std::vector<int> color(intervals.size(), 0);
    for (const IndexSet& component : connected_components(intervals)) {
        const KeyChain chain = build_key_chain(intervals, component);
        const auto& keys = chain.keys;
        std::vector<bool> is_key(intervals.size(), false);
        for (std::size_t k : keys) is_key[k] = true;

        // overlap j = I_{key j} ∩ I_{key j+1} = [a_{j+1}, b_j]
        auto overlap_lo = [&](std::size_t j) -> const Rational& { return intervals[keys[j + 1]].a; };
        auto overlap_hi = [&](std::size_t j) -> const Rational& { return intervals[keys[j]].b; };

        color[keys[0]] = 1;
        for (std::size_t j = 0; j + 1 < keys.size(); ++j) {
            bool witnessed = std::any_of(component.begin(), component.end(), [&](std::size_t i) {
                return !is_key[i] && intervals[i].a <= overlap_lo(j) && overlap_hi(j) <= intervals[i].b;
            });
            color[keys[j + 1]] = witnessed ? color[keys[j]] : other(color[keys[j]]);
        }

        for (std::size_t i : component) {
            if (is_key[i]) continue;
            const Interval& iv = intervals[i];

            std::optional<std::size_t> inside_overlap;
            for (std::size_t j = 0; j + 1 < keys.size() && !inside_overlap; ++j) {
                if (subset_of(iv, overlap_lo(j), overlap_hi(j))) inside_overlap = j;
            }
            if (inside_overlap) {
                // May be the witness that gave both keys one color, so it
                // must take the other one.
                color[i] = other(color[keys[*inside_overlap]]);
                continue;
            }

            std::optional<std::size_t> inside_key;
            for (std::size_t j = 0; j < keys.size() && !inside_key; ++j) {
                if (subset_of(iv, intervals[keys[j]].a, intervals[keys[j]].b)) inside_key = j;
            }
            if (inside_key) {
                color[i] = other(color[keys[*inside_key]]);
                continue;
            }

            std::optional<std::size_t> spanned;
            for (std::size_t j = 0; j + 1 < keys.size(); ++j) {
                if (iv.a <= overlap_lo(j) && overlap_hi(j) <= iv.b) {
                    if (spanned) invariant("non-key interval " + std::to_string(i) + " spans two key overlaps");
                    spanned = j;
                }
            }
            if (!spanned) invariant("non-key interval " + std::to_string(i) + " matches no case");
            color[i] = other(color[keys[*spanned]]);
        }
    }
    return color;
}

Coloring color_intervals(const Instance& instance) {
    if (instance.cls != ObjectClass::Intervals) {
        throw Error(ErrorKind::ClassMismatch, "interval colorer needs an intervals instance");
    }
    std::vector<Interval> ivs;
    ivs.reserve(instance.size());
    for (const auto& o : instance.objects) ivs.push_back(std::get<Interval>(o));
    return Coloring{color_intervals(ivs), 2};
}

}  // namespace geoextract::intervals
