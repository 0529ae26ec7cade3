#pragma once

#include "geoextract/geometry.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Lower-bound constructions and seeded random instances. Every generator
// checks its own structural claims before returning and throws
// Error{AlgorithmInvariant} if one fails.
namespace geoextract::generators {

// [0,2] and [1,3], unit weights, one target point in the overlap.
Instance gen_interval_pair();

// k diagonal k-boxes, 4k^2 segments in total. Each k-box has k horizontal
// and k vertical lines; every line carries two segments meeting at a
// point, and the segments run out to the bounding square. Targets are the
// meeting points and all orthogonal crossings, each of depth exactly 2.
// Requires k >= 2.
Instance gen_kbox(int k);

// gen_kbox with right/left/up/down segments replaced by rays of
// orientation 1/2/3/4 starting at the meeting points. Same targets.
Instance gen_kbox_rays(int k);

// k up-rays at x = 1..k from y = 0, and for each row i = 1..k a left and a
// right ray touching at (i + 1/2, i). Targets: every pairwise
// intersection. Requires k >= 1.
Instance gen_rayfan(int k);

// Four octants whose sections with the projection plane pairwise meet in a
// cell covered by exactly those two; one target per such cell.
Instance gen_octant4();

// Random small-integer configurations checked against the pairwise-cell
// property; returns the first valid one found within `attempts`.
std::optional<Instance> search_octant4(std::uint64_t seed, int attempts = 10000);

struct RandomOptions {
    // For rays: orientations to draw from (default all four). When
    // `all_orientations` is set, each listed orientation occurs at least
    // once (requires n >= the list size).
    std::vector<int> orientations{1, 2, 3, 4};
    bool all_orientations = false;
    int coordinate_range = 0;  // 0 picks a per-class default
};

// Deterministic for fixed (cls, n, seed, options): small integer
// coordinates (so events collide), random positive rational weights, and
// one target point per hyperedge of size >= 2.
Instance gen_random(ObjectClass cls, std::size_t n, std::uint64_t seed, const RandomOptions& options = {});

}  // namespace geoextract::generators
