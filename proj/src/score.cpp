#include "bpm/score.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace bpm {

long long PriorityScore::digit_sum() const {
  long long s = 0;
  for (int d : digits) s += d;
  return s;
}

std::strong_ordering operator<=>(const PriorityScore& a, const PriorityScore& b) {
  size_t n = std::max(a.digits.size(), b.digits.size());
  for (size_t i = 0; i < n; ++i) {
    int da = i < a.digits.size() ? a.digits[i] : 0;
    int db = i < b.digits.size() ? b.digits[i] : 0;
    if (da != db) return da <=> db;
  }
  return std::strong_ordering::equal;
}

PriorityScore priority_score(const BipartiteGraph& g, const Matching& m) {
  validate_matching(g, m);
  PriorityScore score;
  score.digits.assign(g.max_priority(), 0);
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (m.is_matched(v)) ++score.digits[g.priority[v] - 1];
  return score;
}

std::string serialize_matching(const BipartiteGraph& g, const Matching& m,
                               const PriorityScore& score) {
  validate_matching(g, m);
  std::ostringstream out;
  for (const auto& [u, v] : m.pairs()) out << "m " << u << ' ' << v << '\n';
  out << 's';
  for (int d : score.digits) out << ' ' << d;
  out << '\n';
  return out.str();
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

int parse_int(std::string_view tok, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line_no, "expected integer, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

MatchingFile parse_matching_file(std::string_view text) {
  MatchingFile file;
  bool have_s = false;
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
    if (tok.empty() || tok[0] == "c" || tok[0] == "t") continue;
    if (tok[0] == "m") {
      if (tok.size() != 3)
        throw ParseError(line_no, "malformed 'm' line (expected 'm <u> <v>')");
      if (have_s) throw ParseError(line_no, "'m' line after 's' line");
      file.pairs.emplace_back(parse_int(tok[1], line_no), parse_int(tok[2], line_no));
      continue;
    }
    if (tok[0] == "s") {
      if (have_s) throw ParseError(line_no, "duplicate 's' line");
      have_s = true;
      for (size_t i = 1; i < tok.size(); ++i)
        file.score_digits.push_back(parse_int(tok[i], line_no));
      continue;
    }
    throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
  }
  if (!have_s) throw ParseError(line_no, "missing 's' line");
  return file;
}

}  // namespace bpm
