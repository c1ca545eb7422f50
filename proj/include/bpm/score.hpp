#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "bpm/matching.hpp"

namespace bpm {

/// Lexicographic priority score: digits[c-1] counts the matched vertices of
/// priority class c. Class 1 is the most significant digit. Vectors of
/// different length compare as if zero-padded on the right.
struct PriorityScore {
  std::vector<int> digits;

  int digit(int priority_class) const {
    int idx = priority_class - 1;
    return (idx >= 0 && idx < static_cast<int>(digits.size())) ? digits[idx] : 0;
  }

  long long digit_sum() const;

  friend std::strong_ordering operator<=>(const PriorityScore& a, const PriorityScore& b);
  friend bool operator==(const PriorityScore& a, const PriorityScore& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
};

// Score of m on g, with digits over 1..g.max_priority().
// Validates m against g first (a pair that is not an edge of g is an error).
PriorityScore priority_score(const BipartiteGraph& g, const Matching& m);

// Matching file: one "m <u> <v>" line per pair ascending by u, then one
// "s <d1> ... <dP>" score line. Byte-deterministic.
std::string serialize_matching(const BipartiteGraph& g, const Matching& m,
                               const PriorityScore& score);

/// Syntactic contents of a matching file; semantic checks live in the verifier.
struct MatchingFile {
  std::vector<std::pair<int, int>> pairs;  // in file order
  std::vector<int> score_digits;
};

// Accepts m/s lines plus ignorable c/t lines (solver trace output stays
// verifiable). Throws ParseError on malformed input or a missing s line.
MatchingFile parse_matching_file(std::string_view text);

}  // namespace bpm
