#include "bpm/matching.hpp"

#include <stdexcept>
#include <string>

namespace bpm {

void Matching::add_pair(int u, int v) {
  int n = vertex_count();
  if (u < 1 || u > n || v < 1 || v > n || u == v)
    throw std::logic_error("add_pair: bad vertex pair " + std::to_string(u) + "," +
                           std::to_string(v));
  if (partner_[u] != 0 || partner_[v] != 0)
    throw std::logic_error("add_pair: vertex already matched in pair " + std::to_string(u) +
                           "," + std::to_string(v));
  partner_[u] = v;
  partner_[v] = u;
  ++pair_count_;
}

std::vector<std::pair<int, int>> Matching::pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(pair_count_);
  for (int v = 1; v <= vertex_count(); ++v)
    if (partner_[v] > v) out.emplace_back(v, partner_[v]);
  return out;
}

void validate_matching(const BipartiteGraph& g, const Matching& m) {
  if (m.vertex_count() != g.vertex_count())
    throw std::invalid_argument("matching is over " + std::to_string(m.vertex_count()) +
                                " vertices, graph has " + std::to_string(g.vertex_count()));
  for (int v = 1; v <= g.vertex_count(); ++v) {
    int w = m.partner_of(v);
    if (w == 0) continue;
    if (w < 1 || w > g.vertex_count() || m.partner_of(w) != v)
      throw std::invalid_argument("partner map not symmetric at vertex " + std::to_string(v));
    if (v < w) {
      // Pairs are (V1, V2) edges of the host graph.
      if (!g.in_v1(v) || !g.in_v2(w) || !g.has_edge(v, w))
        throw std::invalid_argument("pair " + std::to_string(v) + "-" + std::to_string(w) +
                                    " is not an edge of the graph");
    }
  }
}

}  // namespace bpm
