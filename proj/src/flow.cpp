#include "bpm/flow.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bpm {

FlowNetwork::FlowNetwork(int node_count, int source, int sink)
    : nodes_(node_count), source_(source), sink_(sink) {
  if (node_count < 2) throw std::invalid_argument("flow network needs at least two nodes");
  if (source < 1 || source > node_count)
    throw std::invalid_argument("source " + std::to_string(source) + " out of range [1, " +
                                std::to_string(node_count) + "]");
  if (sink < 1 || sink > node_count)
    throw std::invalid_argument("sink " + std::to_string(sink) + " out of range [1, " +
                                std::to_string(node_count) + "]");
  if (source == sink) throw std::invalid_argument("source equals sink");
}

int FlowNetwork::add_arc(int from, int to) {
  if (from < 1 || from > nodes_ || to < 1 || to > nodes_)
    throw std::invalid_argument("arc endpoint out of range");
  int id = arc_count();
  to_.push_back(to);
  residual_.push_back(1);
  to_.push_back(from);
  residual_.push_back(0);
  adjacency_built_ = false;
  return id;
}

void FlowNetwork::build_adjacency() {
  if (adjacency_built_) return;
  adj_start_.assign(nodes_ + 2, 0);
  adj_.assign(to_.size(), 0);
  for (int slot = 0; slot < slot_count(); ++slot) ++adj_start_[slot_from(slot) + 1];
  for (int v = 1; v <= nodes_; ++v) adj_start_[v + 1] += adj_start_[v];
  std::vector<int> fill(adj_start_.begin(), adj_start_.end());
  for (int slot = 0; slot < slot_count(); ++slot) adj_[fill[slot_from(slot)]++] = slot;
  adjacency_built_ = true;
}

MaxFlowResult max_flow(FlowNetwork& net) {
  net.build_adjacency();
  const int n = net.nodes_;
  const int s = net.source_;
  const int t = net.sink_;

  std::vector<int> level(n + 1);
  std::vector<int> iter(n + 1);
  std::vector<int> bfs_queue;
  bfs_queue.reserve(n);
  MaxFlowResult result;

  auto assign_levels = [&]() -> bool {
    std::fill(level.begin(), level.end(), -1);
    bfs_queue.clear();
    bfs_queue.push_back(s);
    level[s] = 0;
    for (size_t qi = 0; qi < bfs_queue.size(); ++qi) {
      int u = bfs_queue[qi];
      for (int k = net.adj_start_[u]; k < net.adj_start_[u + 1]; ++k) {
        int slot = net.adj_[k];
        int v = net.slot_to(slot);
        if (net.residual_[slot] > 0 && level[v] == -1) {
          level[v] = level[u] + 1;
          bfs_queue.push_back(v);
        }
      }
    }
    return level[t] != -1;
  };

  std::vector<int> path;
  path.reserve(n);
  while (assign_levels()) {
    ++result.phases;
    for (int v = 1; v <= n; ++v) iter[v] = net.adj_start_[v];
    path.clear();
    int u = s;
    for (;;) {
      if (u == t) {
        // Unit capacities: the whole path saturates.
        for (int slot : path) {
          net.residual_[slot] = 0;
          net.residual_[slot ^ 1] = 1;
        }
        ++result.value;
        path.clear();
        u = s;
        continue;
      }
      int chosen = -1;
      for (int& k = iter[u]; k < net.adj_start_[u + 1]; ++k) {
        int slot = net.adj_[k];
        if (net.residual_[slot] > 0 && level[net.slot_to(slot)] == level[u] + 1) {
          chosen = slot;
          break;
        }
      }
      if (chosen >= 0) {  // advance; iter stays on the arc until it dies
        path.push_back(chosen);
        u = net.slot_to(chosen);
        continue;
      }
      if (u == s) break;  // blocking flow complete
      level[u] = -1;      // retreat; u is exhausted for this phase
      int back = path.back();
      path.pop_back();
      u = net.slot_from(back);
      ++iter[u];
    }
  }
  return result;
}

bool is_unit_graph(const FlowNetwork& net) {
  std::vector<int> indeg(net.node_count() + 1, 0);
  std::vector<int> outdeg(net.node_count() + 1, 0);
  for (int id = 0; id < net.arc_count(); ++id) {
    FlowNetwork::Arc a = net.arc(id);
    ++outdeg[a.from];
    ++indeg[a.to];
  }
  for (int v = 1; v <= net.node_count(); ++v) {
    if (v == net.source() || v == net.sink()) continue;
    if (indeg[v] > 1 && outdeg[v] > 1) return false;
  }
  return true;
}

}  // namespace bpm
