#include <numeric>

#include "doctest.h"
#include "tolspace/builders.hpp"
#include "tolspace/error.hpp"
#include "tolspace/group_check.hpp"

using namespace tolspace;

namespace {

Graph complete_graph(int n) {
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int a = 0; a < n; ++a) g.add_edge(a, (a + 1) % n);
  return g;
}

std::vector<int> identity_placement(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

TEST_CASE("small groups are groups") {
  const auto groups = small_groups();
  CHECK(groups.size() == 8);
  for (const auto& g : groups) {
    const int n = g.order();
    const auto t = place_group(g, complete_graph(n), identity_placement(n));
    const GroupCheck r = is_digital_group(t);
    CHECK_MESSAGE(r.ok, g.name);
    CHECK(verify_completeness_theorem(t));
    CHECK(star_of_identity_is_complete_subgroup(t));
  }
  CHECK(cyclic_group(5).op[3][4] == 2);
}

TEST_CASE("Z4 on a square is not continuous") {
  const auto t = place_group(cyclic_group(4), cycle_graph(4), identity_placement(4));
  const GroupCheck r = is_digital_group(t);
  CHECK_FALSE(r.ok);
  CHECK(r.failed == "continuity");
  REQUIRE(r.witness.size() == 4);
  // Re-check the witness by hand: a ≈ b, c ≈ d, a·c and b·d far apart.
  const ToleranceSpace& x = t.carrier();
  const auto& w = r.witness;
  CHECK(adjacent(x, w[0], w[1]));
  CHECK(adjacent(x, w[2], w[3]));
  CHECK_FALSE(adjacent(x, t(w[0], w[2]), t(w[1], w[3])));
  CHECK_THROWS_AS(verify_completeness_theorem(t), InvalidArgument);
}

TEST_CASE("axiom failures are named") {
  const ToleranceSpace k2 = complete(2);
  // Constant table: no identity.
  MultiplicationTable::Table constant{{"v1", {{"v1", "v1"}, {"v2", "v1"}}}, {"v2", {{"v1", "v1"}, {"v2", "v1"}}}};
  CHECK(is_digital_group(MultiplicationTable(k2, "v1", constant)).failed == "identity");

  // Unital but not associative on three points: a·a = b, a·b = a, b·b = e.
  const ToleranceSpace k3({"e", "a", "b"}, {{"e", "a"}, {"e", "b"}, {"a", "b"}});
  MultiplicationTable::Table t{{"e", {{"e", "e"}, {"a", "a"}, {"b", "b"}}},
                               {"a", {{"e", "a"}, {"a", "b"}, {"b", "a"}}},
                               {"b", {{"e", "b"}, {"a", "a"}, {"b", "e"}}}};
  const GroupCheck r = is_digital_group(MultiplicationTable(k3, "e", t));
  CHECK_FALSE(r.ok);
  CHECK(r.failed == "associativity");

  MultiplicationTable::Table partial{{"v1", {{"v1", "v1"}}}};
  CHECK_THROWS_AS(MultiplicationTable(k2, "v1", partial), InvalidArgument);
  CHECK_THROWS_AS(MultiplicationTable(k2, "q", constant), UnknownLabel);
}

TEST_CASE("the trivial group and disconnected carriers") {
  const auto trivial = place_group(cyclic_group(1), complete_graph(1), {0});
  CHECK(is_digital_group(trivial).ok);
  CHECK(verify_completeness_theorem(trivial));
  // Z2 on two isolated points is a digital group, but the theorem needs connectedness.
  const auto apart = place_group(cyclic_group(2), Graph(2), {0, 1});
  CHECK(is_digital_group(apart).ok);
  CHECK_THROWS_AS(verify_completeness_theorem(apart), InvalidArgument);
}

TEST_CASE("exhaustive sweep") {
  const GroupSweepReport r = sweep_small_groups(6);
  CHECK(r.all_complete);
  CHECK(r.stars_complete_subgroups);
  // Only complete carriers admit a structure, and there every placement
  // works: 1 + 2 + 6 + 24 + 24 + 120 + 720 + 720.
  CHECK(r.continuous == 1617);
  CHECK(r.found.size() == 8);
  // Pairs: each group against all connected graphs of its order.
  CHECK(r.pairs == 1 + 1 + 2 + 6 * 2 + 21 + 112 * 2);
}
