#include "geoextract/oracle.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <set>

namespace geoextract::oracle {
namespace {

using Bits = boost::dynamic_bitset<>;

void check_cap(std::size_t n, std::size_t cap) {
    if (n > cap) {
        throw Error(ErrorKind::SizeCap, "oracle size cap exceeded: " + std::to_string(n) + " objects > " +
                                            std::to_string(cap));
    }
}

std::vector<Rational> with_midpoints(std::vector<Rational> events) {
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());
    std::vector<Rational> out;
    out.reserve(events.size() * 2);
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (i) out.push_back(midpoint(events[i - 1], events[i]));
        out.push_back(events[i]);
    }
    return out;
}

IndexSet to_index_set(const Bits& bits) {
    IndexSet s;
    for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) s.push_back(i);
    return s;
}

}  // namespace

std::vector<std::vector<Rational>> candidate_grid(const Instance& instance) {
    const std::size_t d = dimension(instance.cls);
    std::vector<std::vector<Rational>> events(d);
    for (const auto& o : instance.objects) {
        if (auto* iv = std::get_if<Interval>(&o)) {
            events[0].push_back(iv->a);
            events[0].push_back(iv->b);
        } else if (auto* sg = std::get_if<Segment>(&o)) {
            std::size_t along = sg->axis == Axis::Horizontal ? 0 : 1;
            events[along].push_back(sg->lo);
            events[along].push_back(sg->hi);
            events[1 - along].push_back(sg->line);
        } else if (auto* r = std::get_if<Ray>(&o)) {
            events[0].push_back(r->x);
            events[1].push_back(r->y);
        } else if (auto* oc = std::get_if<Octant>(&o)) {
            events[0].push_back(oc->a);
            events[1].push_back(oc->b);
            events[2].push_back(oc->c);
        }
    }
    std::vector<std::vector<Rational>> grid(d);
    for (std::size_t k = 0; k < d; ++k) {
        if (events[k].empty()) continue;
        grid[k] = with_midpoints(events[k]);
        if (instance.cls == ObjectClass::Rays) {
            grid[k].insert(grid[k].begin(), grid[k].front() - 1);
            grid[k].push_back(grid[k].back() + 1);
        } else if (instance.cls == ObjectClass::Octants) {
            grid[k].push_back(grid[k].back() + 1);
        }
    }
    return grid;
}

HyperedgeSet enumerate_hyperedges(const Instance& instance, std::size_t size_cap) {
    check_cap(instance.size(), size_cap);
    HyperedgeSet result;
    const std::size_t n = instance.size();
    if (n < 2) return result;

    const auto grid = candidate_grid(instance);
    const std::size_t d = grid.size();

    // axis_bits[k][c]: objects whose k-th coordinate predicate holds at grid[k][c]
    std::vector<std::vector<Bits>> axis_bits(d);
    for (std::size_t k = 0; k < d; ++k) {
        axis_bits[k].assign(grid[k].size(), Bits(n));
        for (std::size_t c = 0; c < grid[k].size(); ++c) {
            for (std::size_t i = 0; i < n; ++i) {
                if (covers_coordinate(instance.objects[i], k, grid[k][c])) axis_bits[k][c].set(i);
            }
        }
    }

    std::vector<std::size_t> idx(d, 0);
    std::vector<Bits> partial(d + 1, Bits(n));
    partial[0].set();

    // Odometer over the grid, keeping running intersections per prefix.
    std::size_t level = 0;
    while (true) {
        if (level == d) {
            const Bits& cell = partial[d];
            if (cell.count() >= 2) {
                IndexSet edge = to_index_set(cell);
                if (!result.edges.count(edge)) {
                    Point w;
                    for (std::size_t k = 0; k < d; ++k) w.coords.push_back(grid[k][idx[k]]);
                    result.edges.emplace(std::move(edge), std::move(w));
                }
            }
            --level;
            ++idx[level];
            continue;
        }
        if (idx[level] >= grid[level].size()) {
            if (level == 0) break;
            idx[level] = 0;
            --level;
            ++idx[level];
            continue;
        }
        partial[level + 1] = partial[level] & axis_bits[level][idx[level]];
        if (partial[level + 1].count() < 2) {
            ++idx[level];
            continue;
        }
        ++level;
        if (level < d) idx[level] = 0;
    }
    return result;
}

HyperedgeSet enumerate_hyperedges(std::span<const PlaneTriangle> triangles, std::size_t size_cap) {
    check_cap(triangles.size(), size_cap);
    HyperedgeSet result;
    const std::size_t n = triangles.size();
    if (n < 2) return result;

    std::vector<Rational> critical;
    for (const auto& t : triangles) critical.push_back(t.b);
    for (const auto& ti : triangles) {
        for (const auto& tj : triangles) critical.push_back(tj.s - ti.a);
    }
    for (const Rational& v : with_midpoints(std::move(critical))) {
        std::vector<Rational> events;
        for (const auto& t : triangles) {
            if (t.b <= v && t.a <= t.s - v) {
                events.push_back(t.a);
                events.push_back(t.s - v);
            }
        }
        if (events.size() < 4) continue;
        for (const Rational& u : with_midpoints(std::move(events))) {
            Point p{u, v};
            IndexSet edge;
            for (std::size_t i = 0; i < n; ++i) {
                if (contains(triangles[i], p)) edge.push_back(i);
            }
            if (edge.size() >= 2 && !result.edges.count(edge)) result.edges.emplace(std::move(edge), std::move(p));
        }
    }
    return result;
}

ProperVerdict check_proper(const HyperedgeSet& hyperedges, const Coloring& coloring) {
    for (const auto& [edge, witness] : hyperedges.edges) {
        bool mixed = false;
        for (std::size_t i : edge) {
            if (coloring[i] != coloring[edge.front()]) {
                mixed = true;
                break;
            }
        }
        if (!mixed) return {false, edge, witness};
    }
    return {};
}

ProperVerdict check_proper(const Instance& instance, const Coloring& coloring, std::size_t size_cap) {
    validate(coloring, instance.size());
    return check_proper(enumerate_hyperedges(instance, size_cap), coloring);
}

CoverVerdict check_cover(const Instance& instance, std::span<const std::size_t> subset) {
    for (std::size_t i : subset) {
        if (i >= instance.size()) throw Error(ErrorKind::InvalidArgument, "unknown object index " + std::to_string(i));
    }
    for (std::size_t p = 0; p < instance.points.size(); ++p) {
        bool hit = std::any_of(subset.begin(), subset.end(),
                               [&](std::size_t i) { return contains(instance.objects[i], instance.points[p]); });
        if (!hit) return {false, p};
    }
    return {};
}

std::vector<std::vector<std::size_t>> intersection_graph(const HyperedgeSet& hyperedges, std::size_t object_count) {
    std::vector<std::set<std::size_t>> adj(object_count);
    for (const auto& [edge, witness] : hyperedges.edges) {
        for (std::size_t i : edge) {
            for (std::size_t j : edge) {
                if (i != j) adj[i].insert(j);
            }
        }
    }
    std::vector<std::vector<std::size_t>> out(object_count);
    for (std::size_t i = 0; i < object_count; ++i) out[i].assign(adj[i].begin(), adj[i].end());
    return out;
}

}  // namespace geoextract::oracle
