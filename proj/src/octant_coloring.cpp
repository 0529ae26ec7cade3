#include "geoextract/octant_coloring.hpp"

#include "geoextract/coloring_search.hpp"

#include <algorithm>
#include <set>

namespace geoextract::octants {
namespace {

[[noreturn]] void invariant(const std::string& what) {
    throw Error(ErrorKind::AlgorithmInvariant, "octant coloring: " + what);
}

std::vector<Octant> octants_of(const Instance& instance) {
    if (instance.cls != ObjectClass::Octants) {
        throw Error(ErrorKind::ClassMismatch, "octant colorer needs an octants instance");
    }
    std::vector<Octant> out;
    out.reserve(instance.size());
    for (const auto& o : instance.objects) out.push_back(std::get<Octant>(o));
    return out;
}

bool monochromatic(const IndexSet& edge, const std::vector<int>& color) {
    return std::all_of(edge.begin(), edge.end(), [&](std::size_t i) { return color[i] == color[edge.front()]; });
}

// Repeatedly strip a minimum-degree vertex; returns the removal order.
std::vector<std::size_t> degeneracy_order(const std::vector<std::set<std::size_t>>& adj) {
    const std::size_t n = adj.size();
    std::vector<std::size_t> degree(n), order;
    std::vector<bool> removed(n, false);
    for (std::size_t i = 0; i < n; ++i) degree[i] = adj[i].size();
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!removed[i] && (pick == n || degree[i] < degree[pick])) pick = i;
        }
        removed[pick] = true;
        order.push_back(pick);
        for (std::size_t j : adj[pick]) {
            if (!removed[j]) --degree[j];
        }
    }
    return order;
}

}  // namespace

bool dominates(const Octant& outer, const Octant& inner) {
    return outer.a <= inner.a && outer.b <= inner.b && outer.c <= inner.c;
}

DominationDAG compute_domination(std::span<const Octant> octants) {
    if (octants.empty()) throw Error(ErrorKind::InvalidArgument, "no octants");
    const std::size_t n = octants.size();
    auto strictly_above = [&](std::size_t j, std::size_t i) {
        // j knocks i out of the non-dominated set
        return j != i && dominates(octants[j], octants[i]) && (octants[j] != octants[i] || j < i);
    };
    DominationDAG dag;
    std::vector<bool> kept(n, true);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n && kept[i]; ++j) {
            if (strictly_above(j, i)) kept[i] = false;
        }
        if (kept[i]) dag.nondominated.push_back(i);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (kept[i]) continue;
        auto it = std::find_if(dag.nondominated.begin(), dag.nondominated.end(),
                               [&](std::size_t j) { return dominates(octants[j], octants[i]); });
        if (it == dag.nondominated.end()) invariant("dominated octant without a non-dominated dominator");
        dag.dominator_of[i] = *it;
    }
    return dag;
}

Rational compute_cmax(std::span<const Octant> nondominated) {
    if (nondominated.empty()) throw Error(ErrorKind::InvalidArgument, "no octants");
    if (nondominated.size() == 1) {
        const auto& o = nondominated.front();
        return o.a + o.b + o.c + 1;
    }
    Rational best;
    bool first = true;
    for (std::size_t i = 0; i < nondominated.size(); ++i) {
        for (std::size_t j = i + 1; j < nondominated.size(); ++j) {
            const auto& p = nondominated[i];
            const auto& q = nondominated[j];
            Rational cij = std::max(p.a, q.a) + std::max(p.b, q.b) + std::max(p.c, q.c);
            if (first || cij > best) best = cij;
            first = false;
        }
    }
    return best;
}

std::vector<PlaneTriangle> project(std::span<const Octant> nondominated, const Rational& cmax) {
    std::vector<PlaneTriangle> out;
    out.reserve(nondominated.size());
    for (const auto& o : nondominated) {
        if (o.a + o.b + o.c > cmax) invariant("apex above the projection plane");
        out.push_back({o.a, o.b, cmax - o.c});
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = i + 1; j < out.size(); ++j) {
            const auto& s = out[i];
            const auto& t = out[j];
            if (std::max(s.a, t.a) + std::max(s.b, t.b) > std::min(s.s, t.s)) {
                invariant("projected triangles " + std::to_string(i) + " and " + std::to_string(j) + " are disjoint");
            }
            bool nested = (s.a >= t.a && s.b >= t.b && s.s <= t.s) || (t.a >= s.a && t.b >= s.b && t.s <= s.s);
            if (nested) invariant("projected triangle contains another");
        }
    }
    return out;
}

Coloring color_triangles(std::span<const PlaneTriangle> triangles, const TriangleColoringOptions& options) {
    const std::size_t n = triangles.size();
    if (n > options.size_cap) {
        throw Error(ErrorKind::SizeCap, "triangle coloring cap exceeded: " + std::to_string(n) + " > " +
                                            std::to_string(options.size_cap));
    }
    if (n == 0) return Coloring{{}, 4};

    std::vector<IndexSet> edges;
    for (const auto& [edge, witness] : oracle::enumerate_hyperedges(triangles, std::max(n, options.size_cap)).edges) {
        edges.push_back(edge);
    }
    for (const auto& e : options.extra_edges) {
        if (e.size() >= 2) edges.push_back(e);
    }

    std::vector<std::set<std::size_t>> adj(n);
    for (const auto& e : edges) {
        if (e.size() == 2) {
            adj[e[0]].insert(e[1]);
            adj[e[1]].insert(e[0]);
        }
    }
    std::vector<std::size_t> order = degeneracy_order(adj);
    std::reverse(order.begin(), order.end());

    std::vector<int> color(n, 0);
    for (std::size_t v : order) {
        std::set<int> taken;
        for (std::size_t w : adj[v]) taken.insert(color[w]);
        int c = 1;
        while (taken.count(c)) ++c;
        color[v] = c;
    }
    bool greedy_ok = *std::max_element(color.begin(), color.end()) <= 4 &&
                     std::none_of(edges.begin(), edges.end(), [&](const IndexSet& e) { return monochromatic(e, color); });
    if (greedy_ok) return Coloring{std::move(color), 4};

    auto found = find_proper_coloring(n, edges, 4, order);
    if (!found) {
        std::string desc;
        for (const auto& t : triangles) desc += " {" + to_string(t.a) + "," + to_string(t.b) + "," + to_string(t.s) + "}";
        throw Error(ErrorKind::NoColoringFound, "no proper 4-coloring of triangles:" + desc);
    }
    return Coloring{std::move(*found), 4};
}

Coloring color_octants(std::span<const Octant> octants, const OctantColoringOptions& options) {
    const std::size_t n = octants.size();
    if (n > options.size_cap) {
        throw Error(ErrorKind::SizeCap, "octant coloring cap exceeded: " + std::to_string(n) + " > " +
                                            std::to_string(options.size_cap));
    }
    if (n == 0) return Coloring{{}, 4};

    const DominationDAG dag = compute_domination(octants);
    std::vector<Octant> kept;
    for (std::size_t i : dag.nondominated) kept.push_back(octants[i]);
    const Rational cmax = compute_cmax(kept);
    const std::vector<PlaneTriangle> triangles = project(kept, cmax);

    std::vector<GeomObject> objects(octants.begin(), octants.end());
    const Instance full = make_instance(ObjectClass::Octants, objects);
    const std::size_t oracle_cap = std::max(n, oracle::kDefaultSizeCap);
    const oracle::HyperedgeSet hyperedges = oracle::enumerate_hyperedges(full, oracle_cap);

    auto lift = [&](const Coloring& tri) {
        Coloring c{std::vector<int>(n, 0), 4};
        for (std::size_t k = 0; k < dag.nondominated.size(); ++k) c.colors[dag.nondominated[k]] = tri[k];
        for (const auto& [i, j] : dag.dominator_of) c.colors[i] = c.colors[j] == 1 ? 2 : 1;
        return c;
    };

    TriangleColoringOptions tri_options;
    tri_options.size_cap = options.size_cap;
    Coloring result = lift(color_triangles(triangles, tri_options));
    oracle::ProperVerdict verdict = oracle::check_proper(hyperedges, result);
    if (verdict.proper) return result;

    // A cell of the octant arrangement made only of non-dominated octants
    // need not reach the plane, so the triangle coloring can miss it. Feed
    // those cells back as extra constraints and search again.
    std::vector<std::size_t> slot(n, n);
    for (std::size_t k = 0; k < dag.nondominated.size(); ++k) slot[dag.nondominated[k]] = k;
    for (const auto& [edge, witness] : hyperedges.edges) {
        IndexSet mapped;
        for (std::size_t i : edge) {
            if (slot[i] == n) break;
            mapped.push_back(slot[i]);
        }
        if (mapped.size() == edge.size()) tri_options.extra_edges.push_back(std::move(mapped));
    }
    result = lift(color_triangles(triangles, tri_options));
    verdict = oracle::check_proper(hyperedges, result);
    if (!verdict.proper) {
        invariant("lifted coloring is improper at " + to_string(verdict.witness));
    }
    return result;
}

Coloring color_octants(const Instance& instance, const OctantColoringOptions& options) {
    return color_octants(octants_of(instance), options);
}

}  // namespace geoextract::octants
