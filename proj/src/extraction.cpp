#include "geoextract/extraction.hpp"

#include "geoextract/coloring_search.hpp"
#include "geoextract/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>

namespace geoextract::extraction {
namespace {

using Mask = std::uint64_t;

constexpr std::size_t kHardCap = 64;

Mask bit(std::size_t i) { return Mask{1} << i; }

IndexSet members(Mask m) {
    IndexSet out;
    for (; m; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    return out;
}

void check_cap(const Instance& instance, std::size_t cap, const char* what) {
    if (cap > kHardCap) throw Error(ErrorKind::InvalidArgument, "size cap above 64 is not supported");
    if (instance.size() > cap) {
        throw Error(ErrorKind::SizeCap, std::string(what) + " cap exceeded: " + std::to_string(instance.size()) +
                                            " > " + std::to_string(cap));
    }
}

// Coverer masks of the target points with duplicates and supersets removed
// (covering the smaller set covers the larger one).
std::vector<Mask> covering_masks(const Instance& instance) {
    std::vector<Mask> masks;
    for (const auto& p : instance.points) {
        Mask m = 0;
        for (std::size_t i = 0; i < instance.size(); ++i) {
            if (contains(instance.objects[i], p)) m |= bit(i);
        }
        if (!m) throw Error(ErrorKind::Precondition, "target point " + to_string(p) + " lies in no object");
        masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end(), [](Mask l, Mask r) {
        return std::popcount(l) != std::popcount(r) ? std::popcount(l) < std::popcount(r) : l < r;
    });
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<Mask> minimal;
    for (Mask m : masks) {
        bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](Mask s) { return (s & m) == s; });
        if (!redundant) minimal.push_back(m);
    }
    return minimal;
}

Rational weight_of(const Instance& instance, Mask m) {
    Rational w = 0;
    for (std::size_t i : members(m)) w += instance.weights[i];
    return w;
}

class VertexCoverSolver {
public:
    VertexCoverSolver(const std::vector<Rational>& weights, std::vector<Mask> adjacency)
        : w_(weights), adj_(std::move(adjacency)) {}

    // Minimum-weight cover of the edges among `alive`.
    void solve(Mask alive) {
        best_cost_.reset();
        best_ = 0;
        branch(alive, 0, Rational(0));
    }

    Mask best() const { return best_; }

private:
    // Disjoint edges need distinct endpoints.
    Rational matching_bound(Mask alive) const {
        Rational lb = 0;
        Mask free = alive;
        for (Mask m = alive; m; m &= m - 1) {
            std::size_t v = static_cast<std::size_t>(std::countr_zero(m));
            if (!(free & bit(v))) continue;
            Mask nb = adj_[v] & free & ~bit(v);
            if (!nb) continue;
            std::size_t u = static_cast<std::size_t>(std::countr_zero(nb));
            lb += std::min(w_[v], w_[u]);
            free &= ~(bit(v) | bit(u));
        }
        return lb;
    }

    void branch(Mask alive, Mask taken, const Rational& cost) {
        if (best_cost_ && cost + matching_bound(alive) >= *best_cost_) return;

        std::size_t pick = kHardCap;
        int pick_degree = 0;
        for (Mask m = alive; m; m &= m - 1) {
            std::size_t v = static_cast<std::size_t>(std::countr_zero(m));
            int d = std::popcount(adj_[v] & alive);
            if (d > pick_degree) {
                pick = v;
                pick_degree = d;
            }
        }
        if (pick == kHardCap) {
            best_cost_ = cost;
            best_ = taken;
            return;
        }
        branch(alive & ~bit(pick), taken | bit(pick), cost + w_[pick]);
        Mask nb = adj_[pick] & alive;
        Rational nb_cost = cost;
        for (std::size_t u : members(nb)) nb_cost += w_[u];
        branch(alive & ~(nb | bit(pick)), taken | nb, nb_cost);
    }

    const std::vector<Rational>& w_;
    std::vector<Mask> adj_;
    std::optional<Rational> best_cost_;
    Mask best_ = 0;
};

class SetCoverSolver {
public:
    SetCoverSolver(const std::vector<Rational>& weights, std::vector<Mask> sets_of_points)
        : w_(weights), points_(std::move(sets_of_points)) {}

    Mask solve() {
        std::vector<bool> uncovered(points_.size(), true);
        branch(uncovered, 0, 0, Rational(0));
        return best_;
    }

private:
    // Points with pairwise disjoint coverer sets need distinct objects.
    Rational packing_bound(const std::vector<bool>& uncovered, Mask excluded) const {
        Rational lb = 0;
        Mask used = 0;
        for (std::size_t p = 0; p < points_.size(); ++p) {
            if (!uncovered[p]) continue;
            Mask options = points_[p] & ~excluded;
            if (options & used) continue;
            used |= options;
            std::optional<Rational> cheapest;
            for (std::size_t i : members(options)) {
                if (!cheapest || w_[i] < *cheapest) cheapest = w_[i];
            }
            if (cheapest) lb += *cheapest;
        }
        return lb;
    }

    void branch(std::vector<bool>& uncovered, Mask taken, Mask excluded, const Rational& cost) {
        if (best_cost_ && cost + packing_bound(uncovered, excluded) >= *best_cost_) return;

        auto key = std::make_pair(uncovered, excluded);
        auto seen = memo_.find(key);
        if (seen != memo_.end() && seen->second <= cost) return;
        memo_[key] = cost;

        std::optional<std::size_t> target;
        int fewest = 0;
        for (std::size_t p = 0; p < points_.size(); ++p) {
            if (!uncovered[p]) continue;
            int options = std::popcount(points_[p] & ~excluded);
            if (options == 0) return;  // dead end
            if (!target || options < fewest) {
                target = p;
                fewest = options;
            }
        }
        if (!target) {
            best_cost_ = cost;
            best_ = taken;
            return;
        }

        // Cheapest per newly covered point first; ordering only.
        IndexSet choices = members(points_[*target] & ~excluded);
        auto gain = [&](std::size_t i) {
            std::size_t g = 0;
            for (std::size_t p = 0; p < points_.size(); ++p) {
                if (uncovered[p] && (points_[p] & bit(i))) ++g;
            }
            return w_[i] / static_cast<long>(g);
        };
        std::stable_sort(choices.begin(), choices.end(), [&](std::size_t l, std::size_t r) { return gain(l) < gain(r); });

        Mask banned = excluded;
        for (std::size_t i : choices) {
            std::vector<bool> next = uncovered;
            for (std::size_t p = 0; p < points_.size(); ++p) {
                if (points_[p] & bit(i)) next[p] = false;
            }
            branch(next, taken | bit(i), banned, cost + w_[i]);
            banned |= bit(i);
        }
    }

    const std::vector<Rational>& w_;
    std::vector<Mask> points_;
    std::map<std::pair<std::vector<bool>, Mask>, Rational> memo_;
    std::optional<Rational> best_cost_;
    Mask best_ = 0;
};

MinCover finish(const Instance& instance, Mask cover) { return MinCover{members(cover), weight_of(instance, cover)}; }

}  // namespace

ExtractionResult extract(const Instance& instance, const Coloring& coloring) {
    validate(coloring, instance.size());
    if (instance.size() == 0) throw Error(ErrorKind::InvalidArgument, "cannot extract from an empty instance");
    for (const auto& p : instance.points) {
        auto d = depth(instance, p);
        if (d.count < 2) {
            throw Error(ErrorKind::Precondition, "target point " + to_string(p) + " has depth " +
                                                     std::to_string(d.count) + " (needs at least 2)");
        }
    }

    std::vector<Rational> class_weight(coloring.kappa + 1, Rational(0));
    for (std::size_t i = 0; i < instance.size(); ++i) class_weight[coloring[i]] += instance.weights[i];
    int chosen = 1;
    for (int c = 2; c <= coloring.kappa; ++c) {
        if (class_weight[c] > class_weight[chosen]) chosen = c;
    }

    ExtractionResult result;
    result.color = chosen;
    result.kappa = coloring.kappa;
    for (std::size_t i = 0; i < instance.size(); ++i) {
        (coloring[i] == chosen ? result.extracted : result.sol).push_back(i);
    }
    result.extracted_weight = class_weight[chosen];
    const Rational total = total_weight(instance);
    result.ratio = total / result.extracted_weight;

    auto verdict = oracle::check_cover(instance, result.sol);
    if (!verdict.covered) {
        throw Error(ErrorKind::ImproperColoring, "coloring is not proper: target point " +
                                                     to_string(instance.points[*verdict.uncovered_point]) +
                                                     " is covered only by color " + std::to_string(chosen));
    }
    if (result.extracted_weight * coloring.kappa < total) {
        throw Error(ErrorKind::AlgorithmInvariant, "heaviest color class below W/kappa");
    }
    return result;
}

MinCover min_cover_vertex_cover(const Instance& instance, std::size_t size_cap) {
    check_cap(instance, size_cap, "min cover");
    std::vector<Mask> adj(instance.size(), 0);
    for (Mask m : covering_masks(instance)) {
        if (std::popcount(m) != 2) {
            throw Error(ErrorKind::InvalidArgument, "vertex-cover route needs every point in exactly two objects");
        }
        auto ends = members(m);
        adj[ends[0]] |= bit(ends[1]);
        adj[ends[1]] |= bit(ends[0]);
    }
    // Connected components are solved independently.
    Mask cover = 0;
    Mask unseen = instance.size() == kHardCap ? ~Mask{0} : bit(instance.size()) - 1;
    while (unseen) {
        Mask comp = bit(static_cast<std::size_t>(std::countr_zero(unseen)));
        Mask frontier = comp;
        while (frontier) {
            Mask grow = 0;
            for (std::size_t v : members(frontier)) grow |= adj[v];
            frontier = grow & ~comp;
            comp |= grow;
        }
        unseen &= ~comp;
        VertexCoverSolver solver(instance.weights, adj);
        solver.solve(comp);
        cover |= solver.best();
    }
    return finish(instance, cover);
}

MinCover min_cover_set_search(const Instance& instance, std::size_t size_cap) {
    check_cap(instance, size_cap, "min cover");
    SetCoverSolver solver(instance.weights, covering_masks(instance));
    return finish(instance, solver.solve());
}

MinCover exact_min_cover(const Instance& instance, std::size_t size_cap) {
    check_cap(instance, size_cap, "min cover");
    auto masks = covering_masks(instance);
    bool pairs_only = std::all_of(masks.begin(), masks.end(), [](Mask m) { return std::popcount(m) == 2; });
    return pairs_only ? min_cover_vertex_cover(instance, size_cap) : min_cover_set_search(instance, size_cap);
}

Rational exact_extraction_number(const Instance& instance, std::size_t size_cap) {
    const MinCover best = exact_min_cover(instance, size_cap);
    const Rational total = total_weight(instance);
    if (best.weight == total) throw Error(ErrorKind::Unbounded, "every cover takes all the weight");
    return total / (total - best.weight);
}

int exact_chromatic(const Instance& instance, std::size_t size_cap) {
    check_cap(instance, size_cap, "chromatic number");
    if (instance.size() == 0) return 0;
    std::vector<IndexSet> edges;
    for (const auto& [edge, witness] : oracle::enumerate_hyperedges(instance, std::max(size_cap, instance.size())).edges) {
        edges.push_back(edge);
    }
    for (int k = 1;; ++k) {
        if (find_proper_coloring(instance.size(), edges, k)) return k;
    }
}

std::size_t max_independent_set_size(const std::vector<std::vector<std::size_t>>& adjacency) {
    const std::size_t n = adjacency.size();
    if (n > kHardCap) throw Error(ErrorKind::SizeCap, "independent set search limited to 64 vertices");
    std::vector<Mask> adj(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t u : adjacency[v]) adj[v] |= bit(u);
    }
    std::size_t best = 0;
    auto grow = [&](auto&& self, Mask candidates, std::size_t size) -> void {
        if (!candidates) {
            best = std::max(best, size);
            return;
        }
        if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
        std::size_t v = static_cast<std::size_t>(std::countr_zero(candidates));
        self(self, candidates & ~bit(v) & ~adj[v], size + 1);
        self(self, candidates & ~bit(v), size);
    };
    grow(grow, n == kHardCap ? ~Mask{0} : bit(n) - 1, 0);
    return best;
}

}  // namespace geoextract::extraction
