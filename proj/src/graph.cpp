#include "bpm/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace bpm {

bool BipartiteGraph::has_edge(int u, int v) const {
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

int BipartiteGraph::max_priority() const {
  int p = 0;
  for (int v = 1; v <= vertex_count(); ++v) p = std::max(p, priority[v]);
  return p;
}

std::vector<std::vector<int>> BipartiteGraph::v1_adjacency() const {
  std::vector<std::vector<int>> adj(n1 + 1);
  for (const auto& [u, v] : edges) adj[u].push_back(v);  // edges sorted, so lists come out sorted
  return adj;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(std::string_view tok, int line_no, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line_no, std::string("expected integer ") + what + ", got '" +
                                  std::string(tok) + "'");
  return value;
}

std::string id_range(int lo, int hi) {
  if (lo > hi) return "empty";
  return std::to_string(lo) + ".." + std::to_string(hi);
}

}  // namespace

BipartiteGraph parse_graph(std::string_view text) {
  BipartiteGraph g;
  bool have_p = false;
  int p_line = 0;
  long long declared_m = 0;
  long long edges_seen = 0;
  std::unordered_set<long long> edge_keys;
  std::vector<char> priority_set;

  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (nl == text.size() && line.empty()) break;

    auto tok = split_tokens(line);
    if (tok.empty()) continue;  // blank line
    if (tok[0] == "c") continue;

    if (tok[0] == "p") {
      if (have_p) throw ParseError(line_no, "duplicate 'p' line");
      if (tok.size() != 5 || tok[1] != "bpm")
        throw ParseError(line_no, "malformed 'p' line (expected 'p bpm <n1> <n2> <m>')");
      long long n1 = parse_int(tok[2], line_no, "n1");
      long long n2 = parse_int(tok[3], line_no, "n2");
      declared_m = parse_int(tok[4], line_no, "m");
      if (n1 < 0 || n2 < 0 || n1 + n2 > std::numeric_limits<int>::max() - 2)
        throw ParseError(line_no, "vertex counts out of range");
      if (declared_m < 0) throw ParseError(line_no, "negative edge count");
      g.n1 = static_cast<int>(n1);
      g.n2 = static_cast<int>(n2);
      g.priority.assign(g.vertex_count() + 1, g.vertex_count());
      priority_set.assign(g.vertex_count() + 1, 0);
      g.edges.reserve(static_cast<size_t>(std::min<long long>(declared_m, 1 << 20)));
      have_p = true;
      p_line = line_no;
      continue;
    }

    if (!have_p) throw ParseError(line_no, "'" + std::string(tok[0]) + "' line before 'p' line");

    if (tok[0] == "v") {
      if (tok.size() != 3)
        throw ParseError(line_no, "malformed 'v' line (expected 'v <id> <priority>')");
      long long id = parse_int(tok[1], line_no, "vertex id");
      long long pr = parse_int(tok[2], line_no, "priority");
      int n = g.vertex_count();
      if (id < 1 || id > n)
        throw ParseError(line_no, "vertex id " + std::to_string(id) + " out of range [" +
                                      id_range(1, n) + "]");
      if (pr < 1 || pr > n)
        throw ParseError(line_no, "priority " + std::to_string(pr) + " for vertex " +
                                      std::to_string(id) + " outside [1, " + std::to_string(n) +
                                      "]");
      if (priority_set[id])
        throw ParseError(line_no, "duplicate 'v' line for vertex " + std::to_string(id));
      priority_set[id] = 1;
      g.priority[id] = static_cast<int>(pr);
      continue;
    }

    if (tok[0] == "e") {
      if (tok.size() != 3) throw ParseError(line_no, "malformed 'e' line (expected 'e <u> <v>')");
      long long u = parse_int(tok[1], line_no, "edge endpoint");
      long long v = parse_int(tok[2], line_no, "edge endpoint");
      if (u < 1 || u > g.n1)
        throw ParseError(line_no, "edge endpoint " + std::to_string(u) + " not in V1 (V1 ids are " +
                                      id_range(1, g.n1) + ")");
      if (v <= g.n1 || v > g.vertex_count())
        throw ParseError(line_no, "edge endpoint " + std::to_string(v) + " not in V2 (V2 ids are " +
                                      id_range(g.n1 + 1, g.vertex_count()) + ")");
      if (edges_seen == declared_m)
        throw ParseError(line_no, "more than the declared " + std::to_string(declared_m) +
                                      " edge lines");
      long long key = u * static_cast<long long>(g.vertex_count() + 1) + v;
      if (!edge_keys.insert(key).second)
        throw ParseError(line_no,
                         "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      g.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
      ++edges_seen;
      continue;
    }

    throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
  }

  if (!have_p) throw ParseError(line_no, "missing 'p' line");
  if (edges_seen != declared_m)
    throw ParseError(p_line, "instance declares " + std::to_string(declared_m) +
                                 " edges, found " + std::to_string(edges_seen));
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::string serialize_graph(const BipartiteGraph& g) {
  std::ostringstream out;
  out << "p bpm " << g.n1 << ' ' << g.n2 << ' ' << g.edges.size() << '\n';
  int default_priority = g.vertex_count();
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (g.priority[v] != default_priority) out << "v " << v << ' ' << g.priority[v] << '\n';
  for (const auto& [u, v] : g.edges) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace bpm
