#pragma once

#include "bpm/graph.hpp"
#include "bpm/matching.hpp"

namespace bpm {

// Maximum-cardinality matching by Hopcroft-Karp: phases of breadth-first
// layering from the unmatched V1 vertices followed by a maximal set of
// vertex-disjoint shortest augmenting paths found depth-first. O(m*sqrt(n)).
// Deterministic: adjacency is scanned in ascending vertex order.
Matching maximum_matching(const BipartiteGraph& g);

}  // namespace bpm
