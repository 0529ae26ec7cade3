#pragma once

#include "geoextract/geometry.hpp"

#include <optional>
#include <string>

namespace geoextract::svg {

// Static figure of an instance. Objects get class="object" and are stroked
// by color class; target points are drawn as crosses with class="target".
// Intervals are staggered bars, rays are clipped to a padded viewport and
// end in arrowheads, octants appear as their triangles on the c_max plane.
// Output depends only on the inputs.
std::string render_svg(const Instance& instance, const std::optional<Coloring>& coloring = std::nullopt);

// r rounded half away from zero to 6 decimals, trailing zeros kept.
std::string fixed6(const Rational& r);

}  // namespace geoextract::svg
