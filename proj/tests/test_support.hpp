#pragma once

// Helpers shared by the unit and acceptance suites: hand-built graphs,
// random unit networks, and independent structural checks.

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "bpm/flow.hpp"
#include "bpm/generator.hpp"
#include "bpm/graph.hpp"
#include "bpm/matching.hpp"

namespace bpm::testing {

inline BipartiteGraph make_graph(int n1, int n2, std::vector<std::pair<int, int>> edges,
                                 const std::vector<std::pair<int, int>>& priorities = {}) {
  BipartiteGraph g;
  g.n1 = n1;
  g.n2 = n2;
  g.edges = std::move(edges);
  std::sort(g.edges.begin(), g.edges.end());
  g.priority.assign(n1 + n2 + 1, n1 + n2);
  for (auto [v, p] : priorities) g.priority.at(v) = p;
  return g;
}

inline std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) {
  std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

// Random small instance by way of the library generator; the spec parameters
// (sides, density, classes) are themselves drawn from rng.
inline BipartiteGraph random_instance(std::mt19937_64& rng, int max_side, int max_classes) {
  InstanceSpec spec;
  spec.n1 = 1 + static_cast<int>(rand_below(rng, max_side));
  spec.n2 = 1 + static_cast<int>(rand_below(rng, max_side));
  spec.edge_count = static_cast<long long>(
      rand_below(rng, static_cast<std::uint64_t>(spec.n1) * spec.n2 + 1));
  int n = spec.n1 + spec.n2;
  spec.class_count = 1 + static_cast<int>(rand_below(
                             rng, static_cast<std::uint64_t>(std::min(max_classes, n))));
  spec.seed = rng();
  spec.skewed = rand_below(rng, 2) == 1;
  return generate_instance(spec);
}

// Random network that satisfies the unit-graph property by construction:
// candidate arcs are dropped whenever they would give an internal node both
// indegree > 1 and outdegree > 1.
inline FlowNetwork random_unit_network(std::mt19937_64& rng, int max_nodes) {
  int nodes = 3 + static_cast<int>(rand_below(rng, max_nodes - 2));
  int s = 1 + static_cast<int>(rand_below(rng, nodes));
  int t = 1 + static_cast<int>(rand_below(rng, nodes - 1));
  if (t >= s) ++t;
  FlowNetwork net(nodes, s, t);
  std::vector<int> indeg(nodes + 1, 0), outdeg(nodes + 1, 0);
  std::vector<std::vector<char>> present(nodes + 1, std::vector<char>(nodes + 1, 0));
  int attempts = static_cast<int>(rand_below(rng, 4 * nodes + 1));
  for (int a = 0; a < attempts; ++a) {
    int from = 1 + static_cast<int>(rand_below(rng, nodes));
    int to = 1 + static_cast<int>(rand_below(rng, nodes));
    if (from == to || present[from][to]) continue;
    bool from_ok = from == s || from == t || indeg[from] <= 1 || outdeg[from] + 1 <= 1;
    bool to_ok = to == s || to == t || indeg[to] + 1 <= 1 || outdeg[to] <= 1;
    if (!from_ok || !to_ok) continue;
    net.add_arc(from, to);
    present[from][to] = 1;
    ++outdeg[from];
    ++indeg[to];
  }
  return net;
}

// One alternating breadth-first pass: true iff some unmatched V1 vertex
// reaches an unmatched V2 vertex, i.e. an augmenting path exists.
inline bool has_augmenting_path(const BipartiteGraph& g, const Matching& m) {
  auto adj = g.v1_adjacency();
  std::vector<char> seen(g.n1 + 1, 0);
  std::vector<int> queue;
  for (int u = 1; u <= g.n1; ++u)
    if (!m.is_matched(u)) {
      seen[u] = 1;
      queue.push_back(u);
    }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    for (int v : adj[u]) {
      int w = m.partner_of(v);
      if (w == 0) return true;
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return false;
}

// Residual reachability rebuilt from the public arc view only.
inline bool has_residual_augmenting_path(const FlowNetwork& net) {
  std::vector<std::vector<int>> residual_adj(net.node_count() + 1);
  for (int i = 0; i < net.arc_count(); ++i) {
    FlowNetwork::Arc a = net.arc(i);
    if (a.flow == 0) residual_adj[a.from].push_back(a.to);
    if (a.flow == 1) residual_adj[a.to].push_back(a.from);
  }
  std::vector<char> seen(net.node_count() + 1, 0);
  std::vector<int> queue{net.source()};
  seen[net.source()] = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    for (int v : residual_adj[queue[qi]]) {
      if (v == net.sink()) return true;
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
      }
    }
  }
  return false;
}

inline bool flow_conserves(const FlowNetwork& net) {
  std::vector<int> balance(net.node_count() + 1, 0);
  for (int i = 0; i < net.arc_count(); ++i) {
    FlowNetwork::Arc a = net.arc(i);
    balance[a.from] -= a.flow;
    balance[a.to] += a.flow;
  }
  for (int v = 1; v <= net.node_count(); ++v)
    if (v != net.source() && v != net.sink() && balance[v] != 0) return false;
  return true;
}

}  // namespace bpm::testing
