#pragma once

#include "geoextract/geometry.hpp"

#include <cstddef>

namespace geoextract {

// Runs the colorer for the instance's class. size_cap applies to octants.
Coloring color_instance(const Instance& instance, std::size_t size_cap);

// Colors the class colorer may use: 2 for intervals, 4 for segments and
// octants, max(2, type) for rays.
int color_budget(const Instance& instance);

}  // namespace geoextract
