#include "bpm/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "bpm/generator.hpp"
#include "bpm/graph.hpp"
#include "bpm/matching.hpp"
#include "bpm/oracle.hpp"
#include "bpm/priority_match.hpp"
#include "bpm/score.hpp"

namespace bpm::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_result(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

BipartiteGraph load_instance(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ":" + std::to_string(e.line()) + ": " + e.message());
  }
}

// FNV-1a over the digit values; keeps huge score vectors out of the CSV.
std::string score_digest(const PriorityScore& score) {
  std::uint64_t h = 1469598103934665603ULL;
  for (int d : score.digits) {
    std::uint64_t x = static_cast<std::uint64_t>(d);
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (x >> (8 * byte)) & 0xff;
      h *= 1099511628211ULL;
    }
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

std::string trace_lines(const std::vector<ClassStepTrace>& trace) {
  std::ostringstream out;
  for (const ClassStepTrace& step : trace) {
    out << "t " << step.priority_class << ' ' << step.flow_v1 << ' ' << step.flow_v2;
    for (int d : step.score_after.digits) out << ' ' << d;
    out << '\n';
  }
  return out.str();
}

int cmd_gen(const InstanceSpec& spec, std::ostream& out) {
  BipartiteGraph g = generate_instance(spec);
  std::ostringstream text;
  text << "c bpm gen n1=" << spec.n1 << " n2=" << spec.n2 << " m=" << spec.edge_count
       << " k=" << spec.class_count << " seed=" << spec.seed
       << " dist=" << (spec.skewed ? "skewed" : "uniform") << '\n';
  text << serialize_graph(g);
  out << text.str();
  return 0;
}

int cmd_solve(const std::string& input, const std::string& output, bool trace, bool check,
              std::ostream& out) {
  BipartiteGraph g = load_instance(input);
  SolveOptions opts;
  opts.check_invariants = check;
  SolveResult result = max_priority_matching(g, opts);
  if (check) {
    validate_matching(g, result.matching);
    if (priority_score(g, result.matching) != result.score)
      throw std::logic_error("self-check failed: reported score does not match the matching");
  }
  std::string text = serialize_matching(g, result.matching, result.score);
  if (trace) text += trace_lines(result.trace);
  write_result(output, text, out);
  return 0;
}

int cmd_verify(const std::string& instance_path, const std::string& matching_path,
               std::ostream& out) {
  BipartiteGraph g = load_instance(instance_path);
  MatchingFile file;
  try {
    file = parse_matching_file(read_file(matching_path));
  } catch (const ParseError& e) {
    throw std::runtime_error(matching_path + ":" + std::to_string(e.line()) + ": " + e.message());
  }

  Matching m(g.vertex_count());
  for (const auto& [u, v] : file.pairs) {
    if (!g.in_v1(u)) {
      out << "fail: pair " << u << " " << v << ": " << u << " is not a V1 vertex\n";
      return 1;
    }
    if (!g.in_v2(v)) {
      out << "fail: pair " << u << " " << v << ": " << v << " is not a V2 vertex\n";
      return 1;
    }
    if (!g.has_edge(u, v)) {
      out << "fail: pair " << u << " " << v << " is not an edge of the instance\n";
      return 1;
    }
    if (m.is_matched(u) || m.is_matched(v)) {
      out << "fail: vertex " << (m.is_matched(u) ? u : v) << " matched twice\n";
      return 1;
    }
    m.add_pair(u, v);
  }

  PriorityScore actual = priority_score(g, m);
  size_t digits = std::max(actual.digits.size(), file.score_digits.size());
  for (size_t i = 0; i < digits; ++i) {
    int claimed = i < file.score_digits.size() ? file.score_digits[i] : 0;
    int recomputed = i < actual.digits.size() ? actual.digits[i] : 0;
    if (claimed != recomputed) {
      out << "fail: score mismatch at digit " << (i + 1) << ": file has " << claimed
          << ", recomputed " << recomputed << "\n";
      return 1;
    }
  }
  out << "ok: " << m.size() << " pairs, score verified\n";
  return 0;
}

int cmd_oracle(const std::string& input, std::ostream& out) {
  BipartiteGraph g = load_instance(input);
  OracleResult result = oracle_priority_matching(g);
  out << serialize_matching(g, result.matching, result.score);
  return 0;
}

struct BenchCell {
  int k = 0;
  std::uint64_t seed = 0;
};

int cmd_bench(int n1, int n2, long long m, const std::vector<int>& k_list,
              const std::vector<std::uint64_t>& seeds, int reps, int threads,
              const std::string& output, std::ostream& out) {
  if (reps < 1) throw std::runtime_error("--reps must be at least 1");
  if (threads < 1) throw std::runtime_error("--threads must be at least 1");

  std::vector<BenchCell> cells;
  for (int k : k_list)
    for (std::uint64_t seed : seeds) cells.push_back({k, seed});

  std::vector<std::string> cell_rows(cells.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t idx = next.fetch_add(1);
      if (idx >= cells.size()) return;
      const BenchCell& cell = cells[idx];
      InstanceSpec spec;
      spec.n1 = n1;
      spec.n2 = n2;
      spec.edge_count = m;
      spec.class_count = cell.k;
      spec.seed = cell.seed;
      BipartiteGraph g = generate_instance(spec);
      std::ostringstream rows;
      for (int rep = 1; rep <= reps; ++rep) {
        auto start = std::chrono::steady_clock::now();
        SolveResult result = max_priority_matching(g);
        auto stop = std::chrono::steady_clock::now();
        auto usec = std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
        rows << n1 << ',' << n2 << ',' << m << ',' << cell.k << ',' << cell.seed << ',' << rep
             << ',' << usec << ',' << result.stats.flow_phases << ','
             << score_digest(result.score) << '\n';
      }
      cell_rows[idx] = rows.str();
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  std::string text = "n1,n2,m,k,seed,rep,usec,flow_phases,score\n";
  for (const std::string& rows : cell_rows) text += rows;
  write_result(output, text, out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"maximum priority matchings in bipartite graphs"};
  app.require_subcommand(1);

  InstanceSpec gen_spec;
  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--n1", gen_spec.n1, "V1 size")->required();
  gen->add_option("--n2", gen_spec.n2, "V2 size")->required();
  gen->add_option("--m", gen_spec.edge_count, "edge count")->required();
  gen->add_option("--k", gen_spec.class_count, "priority class count")->required();
  gen->add_option("--seed", gen_spec.seed, "RNG seed")->required();
  gen->add_flag("--skewed", gen_spec.skewed, "skew priorities toward class 1");

  std::string solve_input, solve_output;
  bool solve_trace = false, solve_check = false;
  CLI::App* solve = app.add_subcommand("solve", "compute a maximum priority matching");
  solve->add_option("input", solve_input, "instance file")->required();
  solve->add_option("-o,--output", solve_output, "write the matching here instead of stdout");
  solve->add_flag("--trace", solve_trace, "append one t-line per priority class");
  solve->add_flag("--check", solve_check, "verify solver invariants and the result");

  std::string verify_instance, verify_matching;
  CLI::App* verify = app.add_subcommand("verify", "check a matching file against its instance");
  verify->add_option("instance", verify_instance, "instance file")->required();
  verify->add_option("matching", verify_matching, "matching file")->required();

  std::string oracle_input;
  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive reference solve (small instances)");
  oracle->add_option("input", oracle_input, "instance file")->required();

  int bench_n1 = 0, bench_n2 = 0, bench_reps = 1, bench_threads = 1;
  long long bench_m = 0;
  std::vector<int> bench_k_list;
  std::vector<std::uint64_t> bench_seeds;
  std::string bench_output;
  CLI::App* bench = app.add_subcommand("bench", "time the solver over a (k, seed) grid");
  bench->add_option("--n1", bench_n1, "V1 size")->required();
  bench->add_option("--n2", bench_n2, "V2 size")->required();
  bench->add_option("--m", bench_m, "edge count")->required();
  bench->add_option("--k-list", bench_k_list, "comma-separated class counts")
      ->required()
      ->delimiter(',');
  bench->add_option("--seeds", bench_seeds, "comma-separated seeds")->required()->delimiter(',');
  bench->add_option("--reps", bench_reps, "repetitions per cell")->required();
  bench->add_option("--threads", bench_threads, "worker threads over (k, seed) cells");
  bench->add_option("-o,--output", bench_output, "write CSV here instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_spec, out);
    if (solve->parsed()) return cmd_solve(solve_input, solve_output, solve_trace, solve_check, out);
    if (verify->parsed()) return cmd_verify(verify_instance, verify_matching, out);
    if (oracle->parsed()) return cmd_oracle(oracle_input, out);
    if (bench->parsed())
      return cmd_bench(bench_n1, bench_n2, bench_m, bench_k_list, bench_seeds, bench_reps,
                       bench_threads, bench_output, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace bpm::cli
