#pragma once

#include <cstdint>

#include "bpm/graph.hpp"

namespace bpm {

/// Parameters of a reproducible random instance.
struct InstanceSpec {
  int n1 = 0;
  int n2 = 0;
  long long edge_count = 0;    // distinct edges, uniform over V1 x V2
  int class_count = 1;         // priorities drawn from 1..class_count
  std::uint64_t seed = 0;
  bool skewed = false;         // class c with weight 2^(k-c) instead of uniform
};

// Seeded pseudo-random bipartite instance; identical bytes for identical
// specs across runs and platforms (the sampling never goes through
// implementation-defined <random> distributions). The RNG draws edges first,
// so two specs differing only in class_count share the same edge set.
// Throws std::invalid_argument when edge_count > n1*n2 or class_count is not
// in [1, n1+n2].
BipartiteGraph generate_instance(const InstanceSpec& spec);

}  // namespace bpm
