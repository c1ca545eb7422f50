#pragma once

#include "bpm/flow.hpp"
#include "bpm/graph.hpp"
#include "bpm/matching.hpp"
#include "bpm/score.hpp"

namespace bpm {

// Reference implementations for correctness testing. Deliberately simple and
// independent of the production solvers: they share only the data types.

struct OracleResult {
  Matching matching;
  PriorityScore score;
};

// Enumerates every matching of g by include/exclude recursion over the sorted
// edge list and returns one with the lexicographically maximum score.
// Requires n1+n2 <= 24; larger instances throw std::invalid_argument.
OracleResult oracle_priority_matching(const BipartiteGraph& g);

// Maximum matching cardinality by the same enumeration. Requires n1+n2 <= 24.
int oracle_max_matching_size(const BipartiteGraph& g);

// Max flow value by repeated single breadth-first augmenting paths over a
// private residual copy; the input network's flow state is ignored and left
// untouched. Requires node_count <= 64.
int oracle_max_flow(const FlowNetwork& net);

}  // namespace bpm
