#pragma once

#include "geoextract/geometry.hpp"

#include <array>
#include <span>
#include <vector>

// Proper colorings for axis-parallel segments (4 colors) and axis-parallel
// rays (as many colors as orientations present, at least 2).
namespace geoextract::axis {

// Segments sharing an axis and an exact line coordinate.
struct LineGroup {
    Axis axis = Axis::Horizontal;
    Rational line;
    IndexSet members;
};

// Groups ordered by (axis, line).
std::vector<LineGroup> group_by_line(std::span<const Segment> segments);

// Interval coloring per line; horizontal lines use {1, 2}, vertical {3, 4}.
std::vector<int> color_segments(std::span<const Segment> segments);
Coloring color_segments(const Instance& instance);

struct RayTypeProfile {
    std::array<bool, 4> present{};  // present[o - 1] for orientation o
    int type = 0;
};

RayTypeProfile ray_type_profile(std::span<const Ray> rays);

// For every (orientation, line) the ray with the extremal apex, which
// contains every other ray of that orientation on that line. Duplicate
// apexes: the lowest index dominates.
std::vector<bool> dominating_rays(std::span<const Ray> rays);

struct ClippedRays {
    Rational xmin, xmax, ymin, ymax;  // the clipping box
    std::vector<Segment> segments;    // segments[i] replaces rays[i]
};

// Box = apex range widened by 1 on every side; each ray becomes the segment
// from its apex to the box boundary.
ClippedRays clip_rays_to_box(std::span<const Ray> rays);

// Dispatches on the ray type: 1 and 2 give kappa 2, 3 gives kappa 3,
// 4 clips to segments (kappa 4). Throws Error{InvalidArgument} on no rays.
Coloring color_rays(std::span<const Ray> rays);
Coloring color_rays(const Instance& instance);

}  // namespace geoextract::axis
