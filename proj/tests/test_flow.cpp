#include <doctest.h>

#include <cmath>
#include <random>

#include "bpm/flow.hpp"
#include "bpm/oracle.hpp"
#include "test_support.hpp"

using namespace bpm;

TEST_CASE("single path saturates end to end") {
  FlowNetwork net(4, 1, 4);
  net.add_arc(1, 2);
  net.add_arc(2, 3);
  net.add_arc(3, 4);
  MaxFlowResult r = max_flow(net);
  CHECK(r.value == 1);
  for (int i = 0; i < 3; ++i) CHECK(net.arc(i).flow == 1);
}

TEST_CASE("two vertex-disjoint paths carry two units") {
  FlowNetwork net(6, 1, 6);
  net.add_arc(1, 2);
  net.add_arc(2, 6);
  net.add_arc(1, 3);
  net.add_arc(3, 6);
  CHECK(max_flow(net).value == 2);
}

TEST_CASE("no arcs means zero flow and zero phases") {
  FlowNetwork net(2, 1, 2);
  MaxFlowResult r = max_flow(net);
  CHECK(r.value == 0);
  CHECK(r.phases == 0);
}

TEST_CASE("rerunning a solved network pushes nothing further") {
  std::mt19937_64 rng(11);
  FlowNetwork net = bpm::testing::random_unit_network(rng, 12);
  max_flow(net);
  std::vector<int> flows;
  for (int i = 0; i < net.arc_count(); ++i) flows.push_back(net.arc(i).flow);
  CHECK(max_flow(net).value == 0);
  for (int i = 0; i < net.arc_count(); ++i) CHECK(net.arc(i).flow == flows[i]);
}

TEST_CASE("ten-node random unit network agrees with the path-at-a-time oracle") {
  std::mt19937_64 rng(10);
  for (int iter = 0; iter < 20; ++iter) {
    FlowNetwork net = bpm::testing::random_unit_network(rng, 10);
    int expected = oracle_max_flow(net);
    CHECK(max_flow(net).value == expected);
  }
}

TEST_CASE("value, conservation, residual optimality and the phase bound on 200+ unit networks") {
  std::mt19937_64 rng(123);
  for (int iter = 0; iter < 250; ++iter) {
    FlowNetwork net = bpm::testing::random_unit_network(rng, 20);
    REQUIRE(is_unit_graph(net));
    int expected = oracle_max_flow(net);
    MaxFlowResult r = max_flow(net);
    CHECK(r.value == expected);
    CHECK(bpm::testing::flow_conserves(net));
    CHECK_FALSE(bpm::testing::has_residual_augmenting_path(net));
    int bound = 2 * static_cast<int>(std::ceil(std::sqrt(double(net.arc_count())))) + 2;
    CHECK(r.phases <= bound);
  }
}

TEST_CASE("deterministic flows for identical construction order") {
  std::mt19937_64 rng1(77), rng2(77);
  FlowNetwork a = bpm::testing::random_unit_network(rng1, 16);
  FlowNetwork b = bpm::testing::random_unit_network(rng2, 16);
  max_flow(a);
  max_flow(b);
  REQUIRE(a.arc_count() == b.arc_count());
  for (int i = 0; i < a.arc_count(); ++i) CHECK(a.arc(i).flow == b.arc(i).flow);
}

TEST_CASE("is_unit_graph basics") {
  FlowNetwork path(3, 1, 3);
  path.add_arc(1, 2);
  path.add_arc(2, 3);
  CHECK(is_unit_graph(path));

  // internal node 2 with two in-arcs and two out-arcs
  FlowNetwork bad(5, 1, 5);
  bad.add_arc(1, 2);
  bad.add_arc(3, 2);
  bad.add_arc(2, 4);
  bad.add_arc(2, 5);
  CHECK_FALSE(is_unit_graph(bad));

  // heavy in/out degrees are fine on s and t themselves
  FlowNetwork hub(4, 2, 3);
  hub.add_arc(1, 2);
  hub.add_arc(4, 2);
  hub.add_arc(2, 3);
  hub.add_arc(3, 1);
  hub.add_arc(3, 4);
  CHECK(is_unit_graph(hub));
}

TEST_CASE("constructor and add_arc reject bad node ids") {
  CHECK_THROWS_AS(FlowNetwork(4, 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(FlowNetwork(4, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(FlowNetwork(4, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(FlowNetwork(1, 1, 1), std::invalid_argument);
  FlowNetwork net(3, 1, 3);
  CHECK_THROWS_AS(net.add_arc(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(net.add_arc(1, 4), std::invalid_argument);
}
