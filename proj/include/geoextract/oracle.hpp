#pragma once

#include "geoextract/geometry.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

// Brute-force ground truth for induced hypergraphs. Nothing here calls into
// the coloring modules; only geometry membership is used.
namespace geoextract::oracle {

inline constexpr std::size_t kDefaultSizeCap = 60;

// Every covering set of size >= 2, each with one witness point whose
// covering set is exactly that edge.
struct HyperedgeSet {
    std::map<IndexSet, Point> edges;

    std::size_t size() const { return edges.size(); }
    bool contains_edge(const IndexSet& e) const { return edges.count(e) != 0; }
};

// Per-axis event values plus the midpoints between consecutive distinct
// events (and an unbounded-side sample for rays and octants). Covering sets
// are constant between consecutive candidates, so the grid witnesses every
// arrangement cell.
std::vector<std::vector<Rational>> candidate_grid(const Instance& instance);

HyperedgeSet enumerate_hyperedges(const Instance& instance, std::size_t size_cap = kDefaultSizeCap);

// Slice method: sweep critical v values (triangle bottoms and edge crossing
// ordinates) and midpoints; each slice is a 1D interval arrangement.
HyperedgeSet enumerate_hyperedges(std::span<const PlaneTriangle> triangles,
                                  std::size_t size_cap = kDefaultSizeCap);

struct ProperVerdict {
    bool proper = true;
    IndexSet monochromatic_edge;  // empty when proper
    Point witness;
};

ProperVerdict check_proper(const HyperedgeSet& hyperedges, const Coloring& coloring);
ProperVerdict check_proper(const Instance& instance, const Coloring& coloring,
                           std::size_t size_cap = kDefaultSizeCap);

struct CoverVerdict {
    bool covered = true;
    std::optional<std::size_t> uncovered_point;  // index into instance.points
};

CoverVerdict check_cover(const Instance& instance, std::span<const std::size_t> subset);

// Adjacency lists of the intersection graph: i ~ j iff some point lies in
// both objects (equivalently, both appear in a common hyperedge).
std::vector<std::vector<std::size_t>> intersection_graph(const HyperedgeSet& hyperedges, std::size_t object_count);

}  // namespace geoextract::oracle
