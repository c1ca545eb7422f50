#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bpm {

/// Bipartite graph with per-vertex priorities.
///
/// Vertices use one flat 1-based id space: 1..n1 is V1, n1+1..n1+n2 is V2.
/// Priorities are integers in [1, n1+n2]; smaller means more important.
/// Edges are kept sorted by (u, v) and are duplicate-free.
struct BipartiteGraph {
  int n1 = 0;
  int n2 = 0;
  std::vector<std::pair<int, int>> edges;  // (u, v) with u in V1, v in V2
  std::vector<int> priority;               // 1-based, size n1+n2+1; slot 0 unused

  int vertex_count() const { return n1 + n2; }
  bool in_v1(int v) const { return v >= 1 && v <= n1; }
  bool in_v2(int v) const { return v > n1 && v <= n1 + n2; }
  bool has_edge(int u, int v) const;  // binary search over the sorted edge list

  // Largest priority present among the vertices (0 for the empty graph).
  // Priority-score vectors are indexed 1..max_priority().
  int max_priority() const;

  // Neighbor lists for V1 vertices, ascending; index 0 unused.
  std::vector<std::vector<int>> v1_adjacency() const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;
};

/// Instance-file syntax or consistency error, with the 1-based line it was found on.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line),
        message_(message) {}

  int line() const { return line_; }
  const std::string& message() const { return message_; }  // without the line prefix

 private:
  int line_;
  std::string message_;
};

// Parses the line-oriented instance format:
//   c <comment>            ignored
//   p bpm <n1> <n2> <m>    exactly one, first non-comment line
//   v <id> <priority>      optional, at most one per vertex
//   e <u> <v>              exactly m lines, u in V1, v in V2
// Vertices without a v line get priority n1+n2 (the lowest).
// Throws ParseError on malformed lines, out-of-range ids or priorities,
// duplicate edges, and edge-count mismatches.
BipartiteGraph parse_graph(std::string_view text);

// Canonical text form: p line, v lines for non-default priorities ascending,
// then e lines in sorted order. parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const BipartiteGraph& g);

}  // namespace bpm
