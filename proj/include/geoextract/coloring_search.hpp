#pragma once

#include "geoextract/geometry.hpp"

#include <optional>
#include <vector>

namespace geoextract {

// Exhaustive backtracking for a coloring with at most `max_colors` colors
// in which no edge (size >= 2) is monochromatic. Vertices are assigned in
// `order` (all vertices when empty); color symmetry is broken by never
// opening more than one new color at a time.
std::optional<std::vector<int>> find_proper_coloring(std::size_t vertex_count, const std::vector<IndexSet>& edges,
                                                     int max_colors, std::vector<std::size_t> order = {});

}  // namespace geoextract
