#pragma once

#include "geoextract/geometry.hpp"

#include <span>
#include <vector>

// Proper 2-coloring of the hypergraph induced by closed intervals, built on
// a greedy chain of "key" intervals per connected component.
namespace geoextract::intervals {

// A connected component of the union together with its key chain.
struct KeyChain {
    IndexSet component;
    std::vector<std::size_t> keys;  // in chain order
};

// Partition of indices into components of the union; touching intervals
// share a component.
std::vector<IndexSet> connected_components(std::span<const Interval> intervals);

// Greedy chain: start at the minimum left endpoint (ties: longest, then
// lowest index); the successor starts inside the current key, ends strictly
// after it and ends last (ties: smaller left endpoint, then lowest index).
KeyChain build_key_chain(std::span<const Interval> intervals, const IndexSet& component);

// Colors in {1, 2}. Throws Error{AlgorithmInvariant} if a non-key interval
// falls outside the case analysis.
std::vector<int> color_intervals(std::span<const Interval> intervals);

// Instance-level entry point (class must be Intervals); kappa = 2.
Coloring color_intervals(const Instance& instance);

}  // namespace geoextract::intervals
