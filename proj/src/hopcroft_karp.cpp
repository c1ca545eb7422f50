#include "bpm/hopcroft_karp.hpp"

#include <limits>
#include <vector>

namespace bpm {

Matching maximum_matching(const BipartiteGraph& g) {
  const int n1 = g.n1;
  const auto adj = g.v1_adjacency();
  constexpr int kInf = std::numeric_limits<int>::max();

  // partner_v1 indexed by V1 id, partner_v2 by flat id; 0 means free.
  // dist[0] is the layer of the virtual free-V2 node, i.e. the length of the
  // shortest augmenting path in the current phase.
  std::vector<int> partner_v1(n1 + 1, 0);
  std::vector<int> partner_v2(g.vertex_count() + 1, 0);
  std::vector<int> dist(n1 + 1, kInf);
  std::vector<int> queue;
  queue.reserve(n1);

  auto bfs = [&]() -> bool {
    queue.clear();
    for (int u = 1; u <= n1; ++u) {
      if (partner_v1[u] == 0) {
        dist[u] = 0;
        queue.push_back(u);
      } else {
        dist[u] = kInf;
      }
    }
    dist[0] = kInf;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      if (dist[u] >= dist[0]) continue;  // past the shortest augmenting layer
      for (int v : adj[u]) {
        int w = partner_v2[v];
        if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          if (w != 0) queue.push_back(w);
        }
      }
    }
    return dist[0] != kInf;
  };

  // Follows only level-increasing edges, so every path found is shortest;
  // dead-marking (dist = inf) keeps each phase linear and the path set maximal.
  auto dfs = [&](auto&& self, int u) -> bool {
    for (int v : adj[u]) {
      int w = partner_v2[v];
      if (dist[w] == dist[u] + 1 && (w == 0 || self(self, w))) {
        partner_v2[v] = u;
        partner_v1[u] = v;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };

  while (bfs()) {
    for (int u = 1; u <= n1; ++u)
      if (partner_v1[u] == 0) dfs(dfs, u);
  }

  Matching m(g.vertex_count());
  for (int u = 1; u <= n1; ++u)
    if (partner_v1[u] != 0) m.add_pair(u, partner_v1[u]);
  return m;
}

}  // namespace bpm
