#pragma once

#include <vector>

#include "bpm/flow.hpp"
#include "bpm/graph.hpp"
#include "bpm/matching.hpp"
#include "bpm/score.hpp"

namespace bpm {

/// One processed priority class: the two flow values and the score movement.
struct ClassStepTrace {
  int priority_class = 0;
  int flow_v1 = 0;  // value of the V1-side solve
  int flow_v2 = 0;  // value of the V2-side solve
  PriorityScore score_before;
  PriorityScore score_after;
};

struct SolveOptions {
  // Verify per step: both networks are unit graphs, phase counts stay within
  // the unit bound, matching size is preserved, every vertex of priority <= i
  // matched before the step stays matched after each half-step, the side not
  // being augmented keeps its matched set, and digits below i never move.
  // Violations throw std::logic_error.
  bool check_invariants = false;
};

struct SolveStats {
  long long flow_phases = 0;     // Dinic phases summed over all solves
  long long networks_built = 0;  // two per processed class
  long long class_steps = 0;
};

struct SolveResult {
  Matching matching;
  PriorityScore score;
  std::vector<ClassStepTrace> trace;  // one entry per non-empty class
  SolveStats stats;
};

// Distinct priorities present among the vertices, ascending.
std::vector<int> nonempty_priority_classes(const BipartiteGraph& g);

// Flow problem whose augmenting paths match unmatched priority-i V1 vertices
// at the expense of matched V1 vertices of lower priority. Nodes are the
// graph vertices plus s = n+1, t = n+2. Arcs, in order: one per graph edge
// (u->v if unmatched, v->u if matched), then s->u for unmatched u in V1 with
// p(u) = i ascending, then u->t for matched u in V1 with p(u) > i ascending.
FlowNetwork build_v1_phase_network(const BipartiteGraph& g, const Matching& m,
                                   int priority_class);

// The V2-side counterpart: edge arcs as above, then s->v for matched v in V2
// with p(v) > i, then v->t for unmatched v in V2 with p(v) = i.
FlowNetwork build_v2_phase_network(const BipartiteGraph& g, const Matching& m,
                                   int priority_class);

// Reads the updated matching off a solved phase network: a non-matching edge
// arc u->v with flow 1 enters the matching, a matching edge arc v->u keeps
// its pair iff its flow is 0. Checks flow conservation at every internal node
// first and throws std::logic_error if it fails (that is a solver bug).
Matching matching_from_flow(const BipartiteGraph& g, const Matching& before,
                            const FlowNetwork& solved);

// The full pipeline: Hopcroft-Karp maximum matching, then for each non-empty
// priority class ascending, the V1-side solve followed by the V2-side solve.
// The result has maximum cardinality and the lexicographically maximum
// priority score.
SolveResult max_priority_matching(const BipartiteGraph& g, const SolveOptions& opts = {});

}  // namespace bpm
