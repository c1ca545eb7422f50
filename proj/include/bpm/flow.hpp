#pragma once

#include <cstdint>
#include <vector>

namespace bpm {

class FlowNetwork;

struct MaxFlowResult {
  int value = 0;
  int phases = 0;  // blocking-flow phases; <= 2*ceil(sqrt(m))+2 on unit-capacity networks
};

// Dinic's algorithm: breadth-first level assignment in the residual graph,
// then a blocking flow by depth-first advance/retreat with per-node arc
// position memory. Mutates the network's flow state; rerunning on a solved
// network is a no-op (the flow is already maximum).
MaxFlowResult max_flow(FlowNetwork& net);

/// Directed flow network in which every arc has capacity exactly 1.
///
/// Nodes are 1..node_count; arcs keep insertion order, which fixes the
/// order Dinic scans them in and therefore the exact flow returned.
/// Residual twins are created eagerly: slot 2i is arc i, slot 2i^1 its
/// reversal, residual capacity 1-flow and flow respectively.
class FlowNetwork {
 public:
  FlowNetwork(int node_count, int source, int sink);

  // Adds a capacity-1 arc and returns its id (ids count forward arcs only).
  int add_arc(int from, int to);

  int node_count() const { return nodes_; }
  int source() const { return source_; }
  int sink() const { return sink_; }
  int arc_count() const { return static_cast<int>(to_.size() / 2); }

  struct Arc {
    int from;
    int to;
    int flow;  // 0 or 1
  };
  Arc arc(int id) const {
    return {to_[2 * id + 1], to_[2 * id], static_cast<int>(residual_[2 * id + 1])};
  }

  // Overwrites one arc's flow (0 or 1). Consumers that read flows back out,
  // like the matching reconstruction, re-check conservation themselves.
  void set_arc_flow(int id, int flow);

 private:
  friend MaxFlowResult max_flow(FlowNetwork& net);

  // Slot-level residual view used by the solver.
  int slot_count() const { return static_cast<int>(to_.size()); }
  int slot_to(int slot) const { return to_[slot]; }
  int slot_from(int slot) const { return to_[slot ^ 1]; }

  void build_adjacency();  // CSR over slots, grouped by origin node

  int nodes_;
  int source_;
  int sink_;
  std::vector<int> to_;                 // slot endpoint; twin is slot^1
  std::vector<std::uint8_t> residual_;  // residual capacity per slot, 0 or 1
  std::vector<int> adj_start_;          // CSR offsets, size nodes_+2
  std::vector<int> adj_;                // slot ids
  bool adjacency_built_ = false;
};

// True iff every node other than s and t has indegree <= 1 or outdegree <= 1.
// Dinic needs only O(m*sqrt(n)) on such networks.
bool is_unit_graph(const FlowNetwork& net);

}  // namespace bpm
