#include "bpm/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace bpm {

namespace {

constexpr int kMaxOracleVertices = 24;
constexpr int kMaxOracleFlowNodes = 64;

void require_small(const BipartiteGraph& g) {
  if (g.vertex_count() > kMaxOracleVertices)
    throw std::invalid_argument("instance too large for the exhaustive oracle (n1+n2 = " +
                                std::to_string(g.vertex_count()) + " > " +
                                std::to_string(kMaxOracleVertices) + ")");
}

// Include/exclude recursion over the sorted edge list; visit() sees every
// matching of g exactly once, as (partner map, pair count).
template <typename Visit>
void enumerate_matchings(const BipartiteGraph& g, Visit&& visit) {
  std::vector<int> partner(g.vertex_count() + 1, 0);
  int pair_count = 0;
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == g.edges.size()) {
      visit(partner, pair_count);
      return;
    }
    auto [u, v] = g.edges[idx];
    if (partner[u] == 0 && partner[v] == 0) {
      partner[u] = v;
      partner[v] = u;
      ++pair_count;
      self(self, idx + 1);
      partner[u] = 0;
      partner[v] = 0;
      --pair_count;
    }
    self(self, idx + 1);
  };
  rec(rec, 0);
}

Matching matching_from_partner(const BipartiteGraph& g, const std::vector<int>& partner) {
  Matching m(g.vertex_count());
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (partner[v] > v) m.add_pair(v, partner[v]);
  return m;
}

}  // namespace

OracleResult oracle_priority_matching(const BipartiteGraph& g) {
  require_small(g);
  const int top = g.max_priority();
  std::vector<int> best_partner(g.vertex_count() + 1, 0);
  PriorityScore best;
  best.digits.assign(top, 0);
  PriorityScore candidate;
  enumerate_matchings(g, [&](const std::vector<int>& partner, int) {
    candidate.digits.assign(top, 0);
    for (int v = 1; v <= g.vertex_count(); ++v)
      if (partner[v] != 0) ++candidate.digits[g.priority[v] - 1];
    if (candidate > best) {
      best = candidate;
      best_partner = partner;
    }
  });
  return {matching_from_partner(g, best_partner), std::move(best)};
}

int oracle_max_matching_size(const BipartiteGraph& g) {
  require_small(g);
  int best = 0;
  enumerate_matchings(g,
                      [&](const std::vector<int>&, int pairs) { best = std::max(best, pairs); });
  return best;
}

int oracle_max_flow(const FlowNetwork& net) {
  if (net.node_count() > kMaxOracleFlowNodes)
    throw std::invalid_argument("network too large for the oracle max flow (" +
                                std::to_string(net.node_count()) + " > " +
                                std::to_string(kMaxOracleFlowNodes) + " nodes)");
  const int n = net.node_count();
  const int m = net.arc_count();
  const int s = net.source();
  const int t = net.sink();

  // Private residual copy: slot 2i forward with capacity 1, 2i+1 its reversal.
  std::vector<int> to(2 * m);
  std::vector<int> res(2 * m);
  std::vector<std::vector<int>> adj(n + 1);
  for (int i = 0; i < m; ++i) {
    FlowNetwork::Arc a = net.arc(i);
    to[2 * i] = a.to;
    res[2 * i] = 1;
    to[2 * i + 1] = a.from;
    res[2 * i + 1] = 0;
    adj[a.from].push_back(2 * i);
    adj[a.to].push_back(2 * i + 1);
  }

  int value = 0;
  std::vector<int> parent_slot(n + 1);
  std::vector<int> queue;
  queue.reserve(n);
  for (;;) {
    std::fill(parent_slot.begin(), parent_slot.end(), -1);
    queue.clear();
    queue.push_back(s);
    parent_slot[s] = -2;
    for (size_t qi = 0; qi < queue.size() && parent_slot[t] == -1; ++qi) {
      int u = queue[qi];
      for (int slot : adj[u]) {
        int v = to[slot];
        if (res[slot] > 0 && parent_slot[v] == -1) {
          parent_slot[v] = slot;
          queue.push_back(v);
        }
      }
    }
    if (parent_slot[t] == -1) return value;
    for (int v = t; v != s;) {
      int slot = parent_slot[v];
      --res[slot];
      ++res[slot ^ 1];
      v = to[slot ^ 1];
    }
    ++value;
  }
}

}  // namespace bpm
