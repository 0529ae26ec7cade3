#pragma once

#include "geoextract/geometry.hpp"
#include "geoextract/oracle.hpp"

#include <map>
#include <span>
#include <vector>

// Proper 4-coloring of octants {x >= a, y >= b, z >= c}: drop dominated
// octants, cut the rest with the plane x + y + z = c_max, color the
// resulting homothetic triangles and lift the colors back.
namespace geoextract::octants {

inline constexpr std::size_t kDefaultSizeCap = 40;

// True when `outer` contains `inner` (apex of inner is coordinatewise >=).
bool dominates(const Octant& outer, const Octant& inner);

struct DominationDAG {
    IndexSet nondominated;
    std::map<std::size_t, std::size_t> dominator_of;  // dominated index -> member of nondominated
};

// Quadratic pairwise comparison. Among identical apexes the lowest index
// is kept as non-dominated.
DominationDAG compute_domination(std::span<const Octant> octants);

// max over pairs i != j of max(a)+max(b)+max(c); a+b+c+1 for a single octant.
Rational compute_cmax(std::span<const Octant> nondominated);

// Cross-sections with x + y + z = c_max in (u, v) = (x, y) coordinates:
// {u >= a, v >= b, u + v <= c_max - c}.
std::vector<PlaneTriangle> project(std::span<const Octant> nondominated, const Rational& cmax);

struct TriangleColoringOptions {
    std::size_t size_cap = kDefaultSizeCap;
    // Extra hyperedges the coloring must also respect (indices into the
    // triangle list).
    std::vector<IndexSet> extra_edges;
};

// At most 4 colors, proper on the triangle hypergraph: greedy on a
// degeneracy order of the size-2 edges, then exact backtracking if the
// greedy result is improper. Throws Error{NoColoringFound} if no proper
// 4-coloring exists, Error{SizeCap} above the cap.
Coloring color_triangles(std::span<const PlaneTriangle> triangles, const TriangleColoringOptions& options = {});

struct OctantColoringOptions {
    std::size_t size_cap = kDefaultSizeCap;
};

// kappa = 4. The result is verified on the octant hypergraph before it is
// returned.
Coloring color_octants(std::span<const Octant> octants, const OctantColoringOptions& options = {});
Coloring color_octants(const Instance& instance, const OctantColoringOptions& options = {});

}  // namespace geoextract::octants
