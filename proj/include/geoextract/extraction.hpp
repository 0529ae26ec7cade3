#pragma once

#include "geoextract/geometry.hpp"

#include <cstddef>
#include <vector>

// From a proper coloring to a cover that leaves behind one whole color
// class, plus exact desk-scale reference values (minimum cover, extraction
// number, chromatic number) used to check tightness constructions.
namespace geoextract::extraction {

struct ExtractionResult {
    IndexSet sol;        // the cover
    IndexSet extracted;  // one full color class, the complement of sol
    int color = 0;       // the extracted class
    Rational extracted_weight;
    Rational ratio;      // W(all) / extracted_weight
    int kappa = 0;
};

// Picks the heaviest color class (ties: lowest color) and returns its
// complement as the cover. Requires every target point to have depth >= 2
// (Error{Precondition} otherwise) and re-checks that the cover is valid
// (Error{ImproperColoring} with the uncovered point otherwise).
ExtractionResult extract(const Instance& instance, const Coloring& coloring);

inline constexpr std::size_t kCoverSizeCap = 40;
inline constexpr std::size_t kChromaticSizeCap = 20;

struct MinCover {
    IndexSet cover;
    Rational weight;
};

// Minimum-weight subset covering every target point. Instances where every
// point lies in exactly two objects are solved as weighted vertex cover;
// the rest by branching on the least-covered point. Throws Error{SizeCap}
// above the cap (hard limit 64) and Error{Precondition} for depth-0 points.
MinCover exact_min_cover(const Instance& instance, std::size_t size_cap = kCoverSizeCap);

// The two solver routes, exposed for cross-checking.
MinCover min_cover_vertex_cover(const Instance& instance, std::size_t size_cap = kCoverSizeCap);
MinCover min_cover_set_search(const Instance& instance, std::size_t size_cap = kCoverSizeCap);

// W / (W - min cover weight): the best extraction factor on this instance.
// Throws Error{Unbounded} when the minimum cover takes all the weight.
Rational exact_extraction_number(const Instance& instance, std::size_t size_cap = kCoverSizeCap);

// Minimum number of colors of a proper coloring of the induced hypergraph.
int exact_chromatic(const Instance& instance, std::size_t size_cap = kChromaticSizeCap);

// Size of a maximum independent set of a graph given by adjacency lists
// (at most 64 vertices).
std::size_t max_independent_set_size(const std::vector<std::vector<std::size_t>>& adjacency);

}  // namespace geoextract::extraction
