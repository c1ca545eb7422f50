#include "bpm/priority_match.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "bpm/hopcroft_karp.hpp"

namespace bpm {

std::vector<int> nonempty_priority_classes(const BipartiteGraph& g) {
  std::vector<int> classes(g.priority.begin() + 1, g.priority.end());
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  return classes;
}

namespace {

FlowNetwork build_phase_network(const BipartiteGraph& g, const Matching& m, int priority_class,
                                bool v1_side) {
  validate_matching(g, m);
  const int n = g.vertex_count();
  const int s = n + 1;
  const int t = n + 2;
  FlowNetwork net(n + 2, s, t);
  // Edge arcs first, in sorted edge order: forward if free, reversed if matched.
  for (const auto& [u, v] : g.edges) {
    if (m.partner_of(u) == v)
      net.add_arc(v, u);
    else
      net.add_arc(u, v);
  }
  if (v1_side) {
    for (int u = 1; u <= g.n1; ++u)
      if (!m.is_matched(u) && g.priority[u] == priority_class) net.add_arc(s, u);
    for (int u = 1; u <= g.n1; ++u)
      if (m.is_matched(u) && g.priority[u] > priority_class) net.add_arc(u, t);
  } else {
    for (int v = g.n1 + 1; v <= n; ++v)
      if (m.is_matched(v) && g.priority[v] > priority_class) net.add_arc(s, v);
    for (int v = g.n1 + 1; v <= n; ++v)
      if (!m.is_matched(v) && g.priority[v] == priority_class) net.add_arc(v, t);
  }
  return net;
}

void check_unit_network(const FlowNetwork& net, int priority_class) {
  if (!is_unit_graph(net))
    throw std::logic_error("phase network for class " + std::to_string(priority_class) +
                           " is not a unit graph");
}

void check_phase_bound(const MaxFlowResult& f, const FlowNetwork& net, int priority_class) {
  int bound = 2 * static_cast<int>(std::ceil(std::sqrt(static_cast<double>(net.arc_count())))) + 2;
  if (f.phases > bound)
    throw std::logic_error("class " + std::to_string(priority_class) + " solve took " +
                           std::to_string(f.phases) + " phases, unit bound is " +
                           std::to_string(bound));
}

// The two halves of a class step must keep every priority<=i vertex that the
// step's starting matching covered, keep the untouched side's matched set
// bit-for-bit, and never change the matching size.
void check_half_step(const BipartiteGraph& g, const Matching& step_start, const Matching& prev,
                     const Matching& next, int priority_class, bool v1_side) {
  if (next.size() != prev.size())
    throw std::logic_error("class " + std::to_string(priority_class) +
                           " changed the matching size");
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (g.priority[v] <= priority_class && step_start.is_matched(v) && !next.is_matched(v))
      throw std::logic_error("class " + std::to_string(priority_class) +
                             " unmatched priority-" + std::to_string(g.priority[v]) +
                             " vertex " + std::to_string(v));
    bool untouched_side = v1_side ? g.in_v2(v) : g.in_v1(v);
    if (untouched_side && prev.is_matched(v) != next.is_matched(v))
      throw std::logic_error("class " + std::to_string(priority_class) +
                             " moved a matched vertex on the passive side: " +
                             std::to_string(v));
  }
}

void check_step_score(const ClassStepTrace& step) {
  if (step.score_after < step.score_before)
    throw std::logic_error("class " + std::to_string(step.priority_class) +
                           " decreased the score");
  for (int j = 1; j < step.priority_class; ++j)
    if (step.score_before.digit(j) != step.score_after.digit(j))
      throw std::logic_error("class " + std::to_string(step.priority_class) +
                             " moved frozen digit " + std::to_string(j));
  if (step.score_after.digit(step.priority_class) < step.score_before.digit(step.priority_class))
    throw std::logic_error("class " + std::to_string(step.priority_class) +
                           " decreased its own digit");
}

}  // namespace

FlowNetwork build_v1_phase_network(const BipartiteGraph& g, const Matching& m,
                                   int priority_class) {
  return build_phase_network(g, m, priority_class, true);
}

FlowNetwork build_v2_phase_network(const BipartiteGraph& g, const Matching& m,
                                   int priority_class) {
  return build_phase_network(g, m, priority_class, false);
}

Matching matching_from_flow(const BipartiteGraph& g, const Matching& before,
                            const FlowNetwork& solved) {
  const int s = solved.source();
  const int t = solved.sink();

  std::vector<int> net_flow(solved.node_count() + 1, 0);
  for (int id = 0; id < solved.arc_count(); ++id) {
    FlowNetwork::Arc a = solved.arc(id);
    net_flow[a.from] -= a.flow;
    net_flow[a.to] += a.flow;
  }
  for (int v = 1; v <= solved.node_count(); ++v)
    if (v != s && v != t && net_flow[v] != 0)
      throw std::logic_error("flow not conserving at node " + std::to_string(v));

  Matching after(g.vertex_count());
  for (int id = 0; id < solved.arc_count(); ++id) {
    FlowNetwork::Arc a = solved.arc(id);
    if (a.from == s || a.to == t) continue;
    if (g.in_v1(a.from)) {
      if (a.flow == 1) after.add_pair(a.from, a.to);  // free edge picked up by a path
    } else {
      if (a.flow == 0) after.add_pair(a.to, a.from);  // matched edge left in place
    }
  }
  if (after.size() != before.size())
    throw std::logic_error("flow update changed the matching size from " +
                           std::to_string(before.size()) + " to " +
                           std::to_string(after.size()));
  return after;
}

SolveResult max_priority_matching(const BipartiteGraph& g, const SolveOptions& opts) {
  SolveResult result;
  result.matching = maximum_matching(g);
  result.score = priority_score(g, result.matching);

  for (int cls : nonempty_priority_classes(g)) {
    ClassStepTrace step;
    step.priority_class = cls;
    step.score_before = result.score;
    Matching step_start = result.matching;

    FlowNetwork x1 = build_v1_phase_network(g, step_start, cls);
    if (opts.check_invariants) check_unit_network(x1, cls);
    MaxFlowResult f1 = max_flow(x1);
    result.stats.flow_phases += f1.phases;
    if (opts.check_invariants) check_phase_bound(f1, x1, cls);
    Matching mid = matching_from_flow(g, step_start, x1);
    if (opts.check_invariants) check_half_step(g, step_start, step_start, mid, cls, true);

    FlowNetwork x2 = build_v2_phase_network(g, mid, cls);
    if (opts.check_invariants) check_unit_network(x2, cls);
    MaxFlowResult f2 = max_flow(x2);
    result.stats.flow_phases += f2.phases;
    if (opts.check_invariants) check_phase_bound(f2, x2, cls);
    Matching done = matching_from_flow(g, mid, x2);
    if (opts.check_invariants) check_half_step(g, step_start, mid, done, cls, false);

    step.flow_v1 = f1.value;
    step.flow_v2 = f2.value;
    result.matching = std::move(done);
    result.score = priority_score(g, result.matching);
    step.score_after = result.score;
    if (opts.check_invariants) check_step_score(step);

    result.trace.push_back(std::move(step));
    result.stats.networks_built += 2;
    result.stats.class_steps += 1;
  }
  return result;
}

}  // namespace bpm
