#pragma once

#include <utility>
#include <vector>

#include "bpm/graph.hpp"

namespace bpm {

/// A matching over a fixed vertex id space 1..vertex_count.
///
/// Stored as the symmetric partner map (0 = unmatched); the pair set is
/// derived from it, so the two views can never disagree.
class Matching {
 public:
  Matching() = default;
  explicit Matching(int vertex_count) : partner_(vertex_count + 1, 0) {}

  int vertex_count() const { return static_cast<int>(partner_.size()) - 1; }
  bool is_matched(int v) const { return partner_[v] != 0; }
  int partner_of(int v) const { return partner_[v]; }  // 0 if unmatched
  int size() const { return pair_count_; }

  // Matches two currently free vertices. Throws std::logic_error on a
  // conflict (an occupied endpoint signals a solver bug, not bad input).
  void add_pair(int u, int v);

  // Pairs as (smaller id, larger id), ascending by the smaller id.
  // With the V1-then-V2 numbering this is "sorted by the V1 endpoint".
  std::vector<std::pair<int, int>> pairs() const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<int> partner_;
  int pair_count_ = 0;
};

// Checks the matching invariants against a host graph: id space matches,
// every pair is an edge of g, partner map is symmetric. Throws
// std::invalid_argument with a description of the first violation.
void validate_matching(const BipartiteGraph& g, const Matching& m);

}  // namespace bpm
