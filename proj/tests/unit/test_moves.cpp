#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "tolspace/builders.hpp"
#include "tolspace/canonical.hpp"
#include "tolspace/error.hpp"
#include "tolspace/homology.hpp"
#include "tolspace/hopf.hpp"
#include "tolspace/moves.hpp"

using namespace tolspace;

namespace {

HomologyProfile trimmed(HomologyProfile h) {
  while (!h.groups.empty() && h.groups.back().trivial()) h.groups.pop_back();
  return h;
}

std::vector<ToleranceSpace> corpus() {
  return {cycle(4),       cycle(5),        cycle(8),     complete(1),
          complete(5),    sphere(0),       sphere(2),    suspension(cycle(8)),
          cone(cycle(6)), order_sensitive_graph(), homology_sphere_with_simple_edge(), equator_fiber_model()};
}

}  // namespace

TEST_CASE("simple vertices") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& v : complete(n).labels()) CHECK(is_simple_vertex(complete(n), v));
  for (int n = 4; n <= 9; ++n)
    for (const auto& v : cycle(n).labels()) CHECK_FALSE(is_simple_vertex(cycle(n), v));

  const ToleranceSpace g = order_sensitive_graph();
  CHECK(is_simple_vertex(g, "w"));
  CHECK_FALSE(is_simple_vertex(g, "z"));
  CHECK(is_simple_vertex(remove_vertex(g, "w"), "z"));
  CHECK_THROWS_AS(is_simple_vertex(g, "q"), UnknownLabel);
}

TEST_CASE("simple edges") {
  const ToleranceSpace s = homology_sphere_with_simple_edge();
  CHECK(is_simple_edge(s, kSimpleEdgeU, kSimpleEdgeV));
  for (const auto& [u, w] : cycle(6).edges()) CHECK_FALSE(is_simple_edge(cycle(6), u, w));
  for (const auto& [u, w] : complete(3).edges()) CHECK(is_simple_edge(complete(3), u, w));
  CHECK_THROWS_AS(is_simple_edge(cycle(6), "x1", "x3"), InvalidArgument);
}

TEST_CASE("applying moves") {
  const ToleranceSpace c4 = cycle(4);
  const ToleranceSpace five = apply_move(c4, Move::attach_vertex("u", {"x2", "x3"}));
  CHECK(five.size() == 5);
  CHECK(valence(five, "u") == 2);
  CHECK_THROWS_AS(apply_move(cycle(8), Move::delete_vertex("x1")), InvalidMove);
  CHECK(apply_move(complete(2), Move::delete_vertex("v1")).size() == 1);
  CHECK_THROWS_AS(apply_move(c4, Move::attach_vertex("x1", {"x2"})), InvalidMove);
  CHECK_THROWS_AS(apply_move(c4, Move::attach_vertex("u", {"x1", "x3"})), InvalidMove);
  CHECK_THROWS_AS(apply_move(c4, Move::attach_edge("x1", "x2")), InvalidMove);
  CHECK_THROWS_AS(apply_move(c4, Move::delete_edge("x1", "x3")), InvalidMove);
  try {
    apply_move(cycle(8), Move::delete_vertex("x1"));
  } catch (const InvalidMove& e) {
    CHECK(std::string(e.what()).find("x1") != std::string::npos);
  }
}

TEST_CASE("moves invert and keep invariants") {
  std::mt19937_64 rng(99);
  SearchContext ctx;
  for (const auto& start : corpus()) {
    ToleranceSpace x = start;
    const auto chi = euler_characteristic(x);
    const auto h = trimmed(reduced_homology(x));
    for (int step = 0; step < 25; ++step) {
      const auto m = oracle::random_move(x, rng, ctx);
      if (!m) break;
      const ToleranceSpace y = apply_move(x, *m, ctx);
      const ToleranceSpace back = apply_move(y, m->inverse(), ctx);
      CHECK(back == x);
      CHECK(euler_characteristic(y) == chi);
      CHECK(trimmed(reduced_homology(y)) == h);
      x = y;
    }
  }
}

TEST_CASE("traces replay and reverse") {
  const auto r = check_equivalent(cycle(4), cycle(8));
  REQUIRE(r.trace.has_value());
  CHECK_FALSE(trace_defect(*r.trace).has_value());
  const MoveTrace back = reversed(*r.trace);
  CHECK(back.start == r.trace->end);
  CHECK(back.end == r.trace->start);
  CHECK_FALSE(trace_defect(back).has_value());

  MoveTrace broken = *r.trace;
  broken.moves.insert(broken.moves.begin(), Move::delete_vertex("x1"));
  const auto defect = trace_defect(broken);
  REQUIRE(defect.has_value());
  CHECK(defect->find("step 1") != std::string::npos);
}

TEST_CASE("simple contractibility") {
  for (int n = 1; n <= 7; ++n) CHECK(is_simple_contractible(complete(n)).verdict == Verdict::Yes);
  for (int n = 4; n <= 9; ++n) CHECK(is_simple_contractible(cycle(n)).verdict == Verdict::No);
  CHECK(is_simple_contractible(cycle(3)).verdict == Verdict::Yes);
  CHECK(is_simple_contractible(ToleranceSpace()).verdict == Verdict::No);
  for (const auto& x : corpus()) {
    const auto r = is_simple_contractible(cone(x));
    REQUIRE(r.verdict == Verdict::Yes);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->end.size() == 1);
    CHECK_FALSE(trace_defect(*r.witness).has_value());
    for (const auto& m : r.witness->moves) CHECK(m.kind == MoveKind::DeleteVertex);
  }
  // Contractible implies acyclic.
  for (const auto& x : corpus())
    if (is_simple_contractible(x).verdict == Verdict::Yes) CHECK(reduced_homology(x).is_acyclic());
}

TEST_CASE("contractibility agrees with the exhaustive oracle") {
  SearchContext ctx;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n, false)) CHECK(graph_contractible(g, ctx) == oracle::contractible(g));
  // Random graphs well past the memo-free comfort zone of the oracle.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(9, 0.55, rng);
    CHECK(graph_contractible(g, ctx) == oracle::contractible(g));
  }
}

TEST_CASE("the greedy order is not the final word") {
  // Deleting x first destroys the simplicity of y.
  const ToleranceSpace g = order_sensitive_graph();
  CHECK(is_simple_vertex(g, "y"));
  const ScheduleReport r = verify_deletion_schedule(g, {"x", "y"});
  CHECK_FALSE(r.ok);
  REQUIRE(r.steps.size() == 2);
  CHECK(r.steps[0].simple);
  CHECK_FALSE(r.steps[1].simple);
  CHECK(r.residue.size() == 4);
  CHECK(verify_deletion_schedule(g, {}).ok);
  CHECK_THROWS_AS(verify_deletion_schedule(g, {"q"}), UnknownLabel);
}

TEST_CASE("deletion schedule on cone(C8) x C8") {
  const ToleranceSpace p = product(cone(cycle(8, "v"), "B"), cycle(8, "u"));
  std::vector<std::string> order;
  for (int a = 1; a <= 8; ++a)
    for (int b = 1; b <= 8; ++b) order.push_back("(v" + std::to_string(a) + ",u" + std::to_string(b) + ")");
  const ScheduleReport r = verify_deletion_schedule(p, order);
  CHECK(r.ok);
  CHECK(r.steps.size() == 64);
  CHECK(are_isomorphic(r.residue, cycle(8)));
  CHECK(r.trace.moves.size() == 64);
  CHECK_FALSE(trace_defect(r.trace).has_value());
}

TEST_CASE("core reduction") {
  CHECK(reduce_core(complete(5)).core.size() == 1);
  CHECK(reduce_core(cycle(8)).core == cycle(8));
  CHECK(reduce_core(cycle(8)).trace.moves.empty());
  const ToleranceSpace f = fiber(hopf_map(), "1");
  const CoreReduction r = reduce_core(f);
  CHECK(are_isomorphic(r.core, cycle(8)));
  CHECK_FALSE(trace_defect(r.trace).has_value());
  SearchContext ctx;
  for (const auto& x : corpus()) CHECK(is_move_free(reduce_core(x, ctx).core, ctx));
}

TEST_CASE("suspended cycles are recognised") {
  CHECK(suspended_cycle(suspension(cycle(8)).graph()).has_value());
  const auto oct = suspended_cycle(sphere(2).graph());
  REQUIRE(oct.has_value());
  CHECK(oct->equator.size() == 4);
  CHECK_FALSE(suspended_cycle(cycle(6).graph()).has_value());
  CHECK_FALSE(suspended_cycle(cone(cycle(6)).graph()).has_value());
}

TEST_CASE("equivalence checker") {
  const auto circles = check_equivalent(cycle(4), cycle(8), {2, 100000});
  REQUIRE(circles.kind == EquivalenceKind::Equivalent);
  CHECK(circles.trace->moves.size() == 16);
  CHECK(circles.trace->peak_size() <= 10);
  CHECK(relabel(circles.trace->end, circles.relabel) == cycle(8));
  // Each round: two attachments, an edge deletion, a vertex deletion.
  for (std::size_t k = 0; k < 16; k += 4) {
    CHECK(circles.trace->moves[k].kind == MoveKind::AttachVertex);
    CHECK(circles.trace->moves[k + 1].kind == MoveKind::AttachVertex);
  }

  const auto point = check_equivalent(cycle(4), complete(1));
  CHECK(point.kind == EquivalenceKind::NotEquivalent);
  CHECK(point.reason.find("betti_1") != std::string::npos);
  CHECK(point.reason.find("1 vs 0") != std::string::npos);

  const auto spheres = check_equivalent(sphere(2), suspension(cycle(8)), {2, 100000});
  REQUIRE(spheres.kind == EquivalenceKind::Equivalent);
  CHECK(relabel(spheres.trace->end, spheres.relabel) == suspension(cycle(8)));
  CHECK_FALSE(trace_defect(*spheres.trace).has_value());

  // Components differ.
  CHECK(check_equivalent(sphere(0), complete(1)).kind == EquivalenceKind::NotEquivalent);
  // Same homology, and the cores already match.
  CHECK(check_equivalent(cone(cycle(7)), complete(4)).kind == EquivalenceKind::Equivalent);
}

TEST_CASE("equivalence search without a pattern") {
  // C5 and C6 both stretch; a triangle with a pendant vertex collapses to a point.
  ToleranceSpace tadpole({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"c", "d"}});
  const auto r = check_equivalent(tadpole, complete(2));
  CHECK(r.kind == EquivalenceKind::Equivalent);
  const auto c = check_equivalent(cycle(5), cycle(6));
  REQUIRE(c.kind == EquivalenceKind::Equivalent);
  CHECK_FALSE(trace_defect(*c.trace).has_value());
}

TEST_CASE("node budget") {
  SearchLimits limits;
  limits.max_nodes = 1;
  SearchContext ctx(limits);
  CHECK(is_simple_contractible(order_sensitive_graph(), ctx).verdict == Verdict::Unknown);
  // Invariants still answer No without searching.
  CHECK(is_simple_contractible(equator_fiber_model(), ctx).verdict == Verdict::No);
}
