#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bpm::cli {

// Runs the bpm command line (args exclude the program name). Subcommands:
//   gen     --n1 --n2 --m --k --seed [--skewed]
//   solve   INSTANCE [-o FILE] [--trace] [--check]
//   verify  INSTANCE MATCHING
//   oracle  INSTANCE
//   bench   --n1 --n2 --m --k-list --seeds --reps [--threads N] [-o FILE]
// Writes results to `out` unless -o was given; diagnostics go to `err`.
// Returns the process exit code (0 on success).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bpm::cli
