#include "bpm/generator.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace bpm {

namespace {

// Unbiased draw from [0, n) by rejection. <random> distributions are
// implementation-defined, so the byte-determinism contract avoids them.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

// Truncated geometric: P(c) proportional to 2^(k-c) for c in 1..k.
int draw_skewed_class(std::mt19937_64& rng, int k) {
  for (;;) {
    std::uint64_t word = rng();
    if (word == 0) continue;
    int c = std::countr_zero(word) + 1;
    if (c <= k) return c;
  }
}

}  // namespace

BipartiteGraph generate_instance(const InstanceSpec& spec) {
  if (spec.n1 < 0 || spec.n2 < 0) throw std::invalid_argument("negative side size");
  const long long cells = static_cast<long long>(spec.n1) * spec.n2;
  if (spec.edge_count < 0 || spec.edge_count > cells)
    throw std::invalid_argument("edge count " + std::to_string(spec.edge_count) +
                                " outside [0, n1*n2 = " + std::to_string(cells) + "]");
  const int n = spec.n1 + spec.n2;
  if (spec.class_count < 1)
    throw std::invalid_argument("class count must be at least 1");
  if (spec.class_count > n)
    throw std::invalid_argument("class count " + std::to_string(spec.class_count) +
                                " exceeds n1+n2 = " + std::to_string(n));

  std::mt19937_64 rng(spec.seed);
  BipartiteGraph g;
  g.n1 = spec.n1;
  g.n2 = spec.n2;

  // Floyd's sampling: edge_count distinct cells of the n1 x n2 grid.
  std::unordered_set<long long> chosen;
  chosen.reserve(static_cast<size_t>(spec.edge_count) * 2 + 1);
  for (long long j = cells - spec.edge_count; j < cells; ++j) {
    long long pick =
        static_cast<long long>(bounded(rng, static_cast<std::uint64_t>(j) + 1));
    if (!chosen.insert(pick).second) chosen.insert(j);
  }
  g.edges.reserve(chosen.size());
  for (long long cell : chosen)
    g.edges.emplace_back(static_cast<int>(cell / spec.n2) + 1,
                         spec.n1 + static_cast<int>(cell % spec.n2) + 1);
  std::sort(g.edges.begin(), g.edges.end());

  // Priorities come after the edges on the RNG stream, so specs differing
  // only in class_count share the same topology.
  g.priority.assign(n + 1, 0);
  for (int v = 1; v <= n; ++v)
    g.priority[v] = spec.skewed
                        ? draw_skewed_class(rng, spec.class_count)
                        : 1 + static_cast<int>(bounded(
                                  rng, static_cast<std::uint64_t>(spec.class_count)));
  return g;
}

}  // namespace bpm
