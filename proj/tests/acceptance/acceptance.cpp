#include "acceptance.hpp"

#include <chrono>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

#include "../support/oracles.hpp"
#include "tolspace/builders.hpp"
#include "tolspace/canonical.hpp"
#include "tolspace/group_check.hpp"
#include "tolspace/homology.hpp"
#include "tolspace/hopf.hpp"
#include "tolspace/lattice_embed.hpp"
#include "tolspace/moves.hpp"
#include "tolspace/spheres.hpp"

namespace tolspace::acceptance {

namespace {

std::set<std::string>& touched() {
  static std::set<std::string> s;
  return s;
}

void touch(std::initializer_list<const char*> ops) {
  for (const char* op : ops) touched().insert(op);
}

// Collects failed requirements; the first one becomes the reported detail.
class Checks {
 public:
  explicit Checks(const Progress& progress) : progress_(progress) {}

  bool require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
    return ok;
  }
  void note(const std::string& s) {
    if (progress_) progress_(s);
  }
  bool ok() const { return failures_.empty(); }
  const std::string& first_failure() const { return failures_.front(); }
  std::size_t failures() const { return failures_.size(); }

 private:
  const Progress& progress_;
  std::vector<std::string> failures_;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Outcome finish(int id, std::string title, const Checks& c, std::string summary, Clock::time_point t0) {
  Outcome o;
  o.id = id;
  o.title = std::move(title);
  o.pass = c.ok();
  o.seconds = since(t0);
  o.detail = c.ok() ? std::move(summary) : c.first_failure();
  if (c.failures() > 1) o.detail += " (+" + std::to_string(c.failures() - 1) + " more)";
  return o;
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

// The trace replays and its end relabels onto `target` exactly.
bool replays_onto(const EquivalenceVerdict& v, const ToleranceSpace& target, SearchContext& ctx) {
  if (v.kind != EquivalenceKind::Equivalent || !v.trace) return false;
  if (trace_defect(*v.trace, ctx)) return false;
  return relabel(v.trace->end, v.relabel) == target;
}

// Profiles up to trailing trivial degrees: a move can change the clique
// dimension without changing homology.
HomologyProfile trimmed(HomologyProfile h) {
  while (!h.groups.empty() && h.groups.back().trivial()) h.groups.pop_back();
  return h;
}

HomologyProfile expected_profile(std::initializer_list<std::size_t> betti) {
  HomologyProfile h;
  for (std::size_t b : betti) h.groups.push_back({b, {}});
  return h;
}

}  // namespace

Outcome hopf_homology(const Progress& progress) {
  const auto t0 = Clock::now();
  Checks c(progress);
  touch({"cycle", "join", "clique_complex", "boundary_matrix", "smith_normal_form", "reduced_homology",
         "euler_characteristic"});
  const ToleranceSpace x = join(cycle(8), cycle(8));
  c.require(x.size() == 80, "join(C8, C8) has " + std::to_string(x.size()) + " vertices, expected 80");

  const CliqueComplex k = clique_complex(x);
  const auto brute = oracle::cliques(x.graph());
  std::vector<std::size_t> expected_f;
  for (const auto& layer : brute) expected_f.push_back(layer.size());
  c.require(k.f_vector() == expected_f,
            "f-vector " + join_sizes(k.f_vector()) + " differs from brute force " + join_sizes(expected_f));
  c.require(k.dimension() == 5, "clique complex has top dimension " + std::to_string(k.dimension()));
  c.require(boundary_squares_to_zero(k), "boundary of boundary is not zero");
  for (int d = 1; d <= k.dimension(); ++d) {
    const SmithResult s = smith_normal_form(k.boundary(d));
    for (const auto& f : s.factors) c.require(f == 1, "boundary " + std::to_string(d) + " has a non-unit invariant factor");
  }

  const HomologyProfile h = reduced_homology(x);
  c.note("homology " + h.str());
  const HomologyProfile want = expected_profile({0, 0, 0, 1, 0, 0});
  c.require(h == want, "reduced homology " + h.str() + ", expected " + want.str());
  c.require(euler_characteristic(x) == 0, "Euler characteristic " + std::to_string(euler_characteristic(x)));
  c.require(since(t0) < 60.0, "took longer than 60 s");
  return finish(1, "Hopf homology of S1_8 * S1_8", c, h.str(), t0);
}

Outcome fiber_bundle(const Progress& progress) {
  const auto t0 = Clock::now();
  Checks c(progress);
  SearchContext ctx;
  touch({"hopf_map", "fiber", "are_isomorphic", "verify_fiber_bundle", "trivialization", "verify_deletion_schedule",
         "induced", "is_continuous"});
  const ToleranceMap p = hopf_map();
  c.require(is_continuous(p), "Hμ is not continuous");
  const ToleranceSpace f = hopf_fiber();
  c.require(are_isomorphic(fiber(p, "A"), f).has_value(), "fibre over A is not an 8-cycle");

  const BundleReport r = verify_hopf_bundle(ctx);
  for (const auto& failure : r.failures) c.require(false, failure);
  c.require(r.fibers.size() == 6, std::to_string(r.fibers.size()) + " fibres, expected 6");
  for (const auto& fc : r.fibers)
    c.require(replays_onto(fc.verdict, f, ctx), "fibre over " + fc.base + " has no replayable trace onto C8");
  c.require(r.charts.size() == 2, "expected two charts");
  for (const auto& cc : r.charts) {
    c.require(cc.preimage_size == 40 + 32 && cc.points_checked == 72,
              "chart " + cc.name + " checked " + std::to_string(cc.points_checked) + " points, expected 72");
    c.require(cc.phi_supplied && cc.phi_continuous && cc.commutes, "chart " + cc.name + ": φ triangle fails");
    const ToleranceSpace v = induced(p.codomain(), cc.base_points);
    c.require(replays_onto(cc.equivalence, product(v, f), ctx), "chart " + cc.name + ": trace does not replay onto V x F");
  }

  for (Chart ch : {Chart::Upper, Chart::Lower}) {
    const Trivialization t = trivialization(ch);
    const std::string name = to_string(ch);
    c.require(t.preimage_is_cone_product, name + ": preimage is not isomorphic to cone(C8) x C8");
    c.require(t.phi_continuous && t.commutes && t.points_checked == 72, name + ": constructed φ fails");
    const ScheduleReport a = verify_deletion_schedule(t.preimage, chart_preimage_schedule(ch), ctx);
    const ScheduleReport b = verify_deletion_schedule(t.product, chart_product_schedule(ch), ctx);
    c.require(a.ok, name + ": preimage deletion schedule breaks at step " + std::to_string(a.steps.size()));
    c.require(b.ok, name + ": product deletion schedule breaks at step " + std::to_string(b.steps.size()));
    c.require(are_isomorphic(a.residue, f).has_value() && are_isomorphic(b.residue, f).has_value(),
              name + ": schedule residues are not both 8-cycles");
    c.note(name + ": schedules of " + std::to_string(a.steps.size()) + " and " + std::to_string(b.steps.size()) +
           " deletions leave C8");
  }
  c.require(since(t0) < 120.0, "took longer than 120 s");
  return finish(2, "Hopf fibre bundle over U1, U2", c, "6 fibres ≈ C8; 2 charts, 72 points each commute", t0);
}

Outcome mu_fidelity(const Progress& progress) {
  const auto t0 = Clock::now();
  Checks c(progress);
  touch({"mu", "product", "is_continuous", "phi_bar"});
  const auto bad = mu_disagreements();
  c.require(bad.empty(), std::to_string(bad.size()) + " cells differ between closed form and table");
  c.require(mu(1, 1) == S4Element::One, "mu(1,1) != 1");
  c.require(mu(3, 4) == S4Element::MinusOne, "mu(3,4) != -1");
  c.require(mu(6, 2) == S4Element::MinusI, "mu(6,2) != -i");

  const ToleranceSpace xy = product(cycle(8, "x"), cycle(8, "y"));
  std::size_t edges = 0;
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j)
      for (int di = -1; di <= 1; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const int i2 = (i - 1 + di + 8) % 8 + 1, j2 = (j - 1 + dj + 8) % 8 + 1;
          ++edges;
          c.require(adjacent(mu(i, j), mu(i2, j2)),
                    "mu breaks continuity on (" + std::to_string(i) + "," + std::to_string(j) + ")~(" +
                        std::to_string(i2) + "," + std::to_string(j2) + ")");
        }
  c.require(edges / 2 == xy.edge_count(), "edge count of C8 x C8 disagrees with the strong product");

  ToleranceMap::Assignment a;
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j)
      a[ProductLabel{"x" + std::to_string(i), "y" + std::to_string(j)}.str()] = label(mu(i, j));
  c.require(is_continuous(ToleranceMap(xy, circle4(), std::move(a))), "mu: C8 x C8 -> C4 is not continuous");
  c.require(is_continuous(phi_bar()), "the doubling map C8 -> C4 is not continuous");
  c.require(since(t0) < 1.0, "took longer than 1 s");
  return finish(3, "mu closed form, table and continuity", c,
                "64/64 cells agree; " + std::to_string(edges / 2) + " product edges continuous", t0);
}

Outcome homology_three_sphere(const Progress& progress) {
  const auto t0 = Clock::now();
  Checks c(progress);
  SearchContext ctx;
  touch({"is_digital_homology_sphere", "link", "star", "reduce_core", "suspension", "is_simple_vertex", "valence"});
  const ToleranceSpace x = hopf_total();
  const SphereReport r = is_digital_homology_sphere(x, 3, {}, ctx);
  c.require(r.verdict == Verdict::Yes, std::string("verdict ") + to_string(r.verdict));
  c.require(r.homology && r.homology->is_sphere(3), "homology is not that of a 3-sphere");
  c.require(r.links.size() == 80, std::to_string(r.links.size()) + " link reports, expected 80");

  // Type I: the 16 vertices on an apex side, (x,B) and (A,y). Type II: (x,y).
  std::map<std::size_t, std::size_t> type1, type2;
  for (const auto& l : r.links) {
    const bool apex_side = l.vertex.find(",B)") != std::string::npos || l.vertex.rfind("(A,", 0) == 0;
    (apex_side ? type1 : type2)[l.link_size]++;
    c.require(l.verdict == Verdict::Yes, "link of " + l.vertex + ": " + l.method);
    c.require(l.method == "digital sphere" || l.method == "core is a digital sphere" ||
                  l.method == "core is a suspended cycle",
              "link of " + l.vertex + " accepted by " + l.method);
    c.require(link(x, l.vertex).size() == l.link_size && valence(x, l.vertex) == static_cast<int>(l.link_size),
              "link size of " + l.vertex + " misreported");
  }
  auto sizes = [](const std::map<std::size_t, std::size_t>& m) {
    std::string s;
    for (const auto& [size, count] : m) s += (s.empty() ? "" : ", ") + std::to_string(count) + " x " + std::to_string(size);
    return s;
  };
  c.note("Type I links: " + sizes(type1) + "; Type II links: " + sizes(type2));
  c.require(type1.size() == 1 && type1.count(32) && type1[32] == 16,
            "Type I links have " + sizes(type1) + " vertices, expected 16 x 32");
  c.require(type2.size() == 1 && type2.count(14) && type2[14] == 64,
            "Type II links have " + sizes(type2) + " vertices, expected 64 x 14");

  // The apex-side link contracts onto a suspended 8-cycle, the other onto an octahedron.
  const CoreReduction apex = reduce_core(link(x, "(x1,B)"), ctx);
  c.require(are_isomorphic(apex.core, suspension(cycle(8))).has_value(), "core of lk((x1,B)) is not susp(C8)");
  const CoreReduction mid = reduce_core(link(x, "(x1,y1)"), ctx);
  c.require(are_isomorphic(mid.core, sphere(2)).has_value(), "core of lk((x1,y1)) is not the octahedron");
  c.require(star(x, "(x1,y1)").size() == 15, "star of (x1,y1) does not have 15 vertices");
  c.require(!is_simple_vertex(x, "(x1,y1)", ctx), "(x1,y1) is simple in a homology 3-sphere");
  c.require(since(t0) < 600.0, "took longer than 10 min");
  return finish(4, "join(C8, C8) is a digital homology 3-sphere", c,
                "80 links: " + sizes(type1) + " (Type I), " + sizes(type2) + " (Type II)", t0);
}

Outcome sphere_with_simple_edge(const Progress& progress) {
  const auto t0 = Clock::now();
  Checks c(progress);
  SearchContext ctx;
  touch({"is_digital_sphere", "is_digital_homology_sphere", "is_simple_edge", "apply_move", "adjacent"});
  const ToleranceSpace s = homology_sphere_with_simple_edge();
  c.require(s.size() == 8, "space has " + std::to_string(s.size()) + " vertices, expected 8");
  c.require(adjacent(s, kSimpleEdgeU, kSimpleEdgeV), "uv is not an edge");
  c.require(is_digital_homology_sphere(s, 2, {}, ctx).verdict == Verdict::Yes, "not a digital homology 2-sphere");
  c.require(is_digital_sphere(s, 2, ctx).verdict == Verdict::No, "unexpectedly a digital 2-sphere");
  c.require(is_simple_edge(s, kSimpleEdgeU, kSimpleEdgeV, ctx), "uv is not a simple edge");
  const ToleranceSpace t = apply_move(s, Move::delete_edge(kSimpleEdgeU, kSimpleEdgeV), ctx);
  c.require(is_digital_sphere(t, 2, ctx).verdict == Verdict::Yes, "deleting uv does not give a digital 2-sphere");
  return finish(5, "homology 2-sphere that becomes a sphere after one edge", c,
                "homology sphere yes, sphere no; uv simple; X - uv is a digital 2-sphere", t0);
}

Outcome equivalence_of_circles(const Progress& progress) {
  const auto t0 = Clock::now();
  Checks c(progress);
  SearchContext ctx;
  touch({"check_equivalent", "complete", "is_simple_vertex", "reduced_homology"});
  const ToleranceSpace c4 = cycle(4), c8 = cycle(8);
  EquivalenceBudget budget;
  budget.extra_vertices = 2;
  const EquivalenceVerdict v = check_equivalent(c4, c8, budget, {}, ctx);
  c.require(v.kind == EquivalenceKind::Equivalent, std::string("verdict ") + to_string(v.kind) + ": " + v.reason);
  std::size_t moves = 0;
  if (v.trace) {
    moves = v.trace->moves.size();
    c.require(moves == 16, std::to_string(moves) + " moves, expected 4 rounds of 4");
    c.require(v.trace->peak_size() <= 8 + 2, "trace grows past |C8| + 2");
    c.require(replays_onto(v, c8, ctx), "trace does not replay onto C8");
  }
  c.require(trimmed(reduced_homology(c4)) == trimmed(reduced_homology(c8)), "Betti profiles of C4 and C8 differ");
  for (const auto& l : c8.labels()) c.require(!is_simple_vertex(c8, l, ctx), l + " is simple in C8");
  const EquivalenceVerdict k1 = check_equivalent(c4, complete(1), budget, {}, ctx);
  c.require(k1.kind == EquivalenceKind::NotEquivalent, "C4 and a point are not told apart");
  return finish(6, "C4 ≈ C8", c, std::to_string(moves) + " moves via " + v.method, t0);
}

Outcome no_circle_multiplication(const Progress& progress) {
  const auto t0 = Clock::now();
  Checks c(progress);
  touch({"search_unital_multiplication"});
  std::string summary;
  for (int n : {4, 8}) {
    std::size_t nodes = 0;
    const auto m = search_unital_multiplication(cycle(n), "x1", &nodes);
    c.require(!m.has_value(), "found a unital multiplication on C" + std::to_string(n));
    summary += (summary.empty() ? "" : "; ") + std::string("C") + std::to_string(n) + ": none (" +
               (nodes == 0 ? std::string("unit axes already discontinuous") : std::to_string(nodes) + " nodes") + ")";
  }
  c.require(search_unital_multiplication(complete(2), "v1").has_value(), "search misses the multiplication on K2");
  c.require(since(t0) < 300.0, "took longer than 5 min");
  return finish(7, "no unital multiplication on C4 or C8", c, summary, t0);
}

Outcome group_completeness(const Progress& progress) {
  const auto t0 = Clock::now();
  Checks c(progress);
  touch({"is_digital_group", "verify_completeness_theorem"});
  const GroupSweepReport r = sweep_small_groups(6);
  c.note(std::to_string(r.pairs) + " (group, graph) pairs, " + std::to_string(r.placements) + " placements");
  c.require(r.continuous > 0, "no continuous group structure found at all");
  c.require(r.all_complete, "a continuous group lives on an incomplete carrier");
  c.require(r.stars_complete_subgroups, "a star of the identity is not a complete subgroup");

  const FiniteGroup z4 = cyclic_group(4);
  Graph square(4);
  for (int k = 0; k < 4; ++k) square.add_edge(k, (k + 1) % 4);
  const GroupCheck on_c4 = is_digital_group(place_group(z4, square, {0, 1, 2, 3}));
  c.require(!on_c4.ok && on_c4.failed == "continuity" && on_c4.witness.size() == 4, "Z4 on C4 is not rejected for continuity");
  Graph k4(4);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) k4.add_edge(a, b);
  const MultiplicationTable on_k4 = place_group(z4, k4, {0, 1, 2, 3});
  c.require(is_digital_group(on_k4).ok && verify_completeness_theorem(on_k4), "Z4 on K4 fails");
  return finish(8, "connected digital groups of order <= 6 are complete", c,
                std::to_string(r.continuous) + " continuous structures, all on complete graphs", t0);
}

Outcome property_suites(const Progress& progress) {
  const auto t0 = Clock::now();
  Checks c(progress);
  SearchContext ctx;
  touch({"apply_move", "connected_components", "embed", "is_simple_contractible", "sphere", "cone"});
  const std::vector<ToleranceSpace> corpus = {cycle(4),
                                              cycle(8),
                                              sphere(2),
                                              suspension(cycle(8)),
                                              homology_sphere_with_simple_edge(),
                                              order_sensitive_graph(),
                                              cone(cycle(5)),
                                              complete(4)};

  // (a) invariants along random move walks, 1000 moves in total.
  std::mt19937_64 rng(20240611);
  std::size_t moves = 0, complexes = 0;
  const std::size_t per_space = 1000 / corpus.size();
  for (const auto& start : corpus) {
    const HomologyProfile h0 = reduced_homology(start);
    const auto chi0 = euler_characteristic(start);
    ToleranceSpace x = start;
    for (std::size_t k = 0; k < per_space; ++k) {
      const auto m = oracle::random_move(x, rng, ctx);
      if (!c.require(m.has_value(), "no valid move found")) break;
      x = apply_move(x, *m, ctx);
      ++moves;
      const CliqueComplex kx = clique_complex(x);
      ++complexes;
      c.require(boundary_squares_to_zero(kx), "boundary of boundary nonzero after " + m->str());
      c.require(euler_characteristic(kx) == chi0, "Euler characteristic changed by " + m->str());
      const HomologyProfile h = reduced_homology(kx);
      c.require(trimmed(h) == trimmed(h0), "homology changed by " + m->str() + ": " + h0.str() + " -> " + h.str());
      c.require(connected_components(x).size() == (h.groups.empty() ? 0 : h.groups[0].betti + 1),
                "component count disagrees with reduced H0");
    }
  }
  c.note(std::to_string(moves) + " random moves, invariants unchanged");

  // (b) is folded into (a) and (c); (c) embedding round trip; (d) contractibility oracle.
  std::size_t embedded = 0, compared = 0;
  auto space_of = [](const Graph& g) {
    std::vector<std::string> labels;
    for (int v = 0; v < g.size(); ++v) labels.push_back("v" + std::to_string(v + 1));
    return ToleranceSpace::from_graph(std::move(labels), g);
  };
  const std::vector<std::size_t> all_counts = {1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) {
    const auto graphs = enumerate_graphs(n, false);
    c.require(graphs.size() == all_counts[static_cast<std::size_t>(n - 1)],
              std::to_string(graphs.size()) + " graphs on " + std::to_string(n) + " vertices");
    for (const Graph& g : graphs) {
      const ToleranceSpace x = space_of(g);
      const CliqueComplex kx = clique_complex(x);
      ++complexes;
      c.require(boundary_squares_to_zero(kx), "boundary of boundary nonzero");
      if (is_connected(g)) {
        c.require(digital_image(embed(x)) == x, "embedding round trip fails on a " + std::to_string(n) + "-vertex graph");
        ++embedded;
      }
      const ContractibilityResult r = is_simple_contractible(x, ctx);
      ++compared;
      c.require((r.verdict == Verdict::Yes) == oracle::contractible(g),
                "contractibility disagrees with the oracle on a " + std::to_string(n) + "-vertex graph");
      if (r.witness) c.require(!trace_defect(*r.witness, ctx), "contractibility witness does not replay");
    }
  }
  for (const auto& x : {cycle(4), cycle(8), sphere(2), suspension(cycle(8)), homology_sphere_with_simple_edge(),
                        hopf_base(), equator_fiber_model(), hopf_total()}) {
    c.require(digital_image(embed(x)) == x, "embedding round trip fails on an example space");
    ++embedded;
    ++complexes;
    c.require(boundary_squares_to_zero(clique_complex(x)), "boundary of boundary nonzero on an example space");
  }
  return finish(9, "property suites", c,
                std::to_string(moves) + " moves; " + std::to_string(complexes) + " complexes with ∂∂ = 0; " +
                    std::to_string(embedded) + " embeddings; " + std::to_string(compared) + " oracle comparisons",
                t0);
}

std::vector<Outcome> run_all(const Progress& progress) {
  using Fn = Outcome (*)(const Progress&);
  const Fn all[] = {hopf_homology,           fiber_bundle,           mu_fidelity,
                    homology_three_sphere,   sphere_with_simple_edge, equivalence_of_circles,
                    no_circle_multiplication, group_completeness,     property_suites};
  std::vector<Outcome> out;
  for (Fn f : all) {
    Progress tagged;
    const int id = static_cast<int>(out.size()) + 1;
    if (progress) tagged = [&, id](const std::string& s) { progress("[" + std::to_string(id) + "] " + s); };
    try {
      out.push_back(f(tagged));
    } catch (const std::exception& e) {
      out.push_back({id, "criterion " + std::to_string(id), false, std::string("threw: ") + e.what(), 0.0});
    }
  }
  return out;
}

std::string format_table(const std::vector<Outcome>& outcomes) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& o : outcomes) {
    if (!o.pass) ++failed;
    os << (o.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << o.id << "  " << o.title << "  [" << std::fixed
       << std::setprecision(2) << o.seconds << " s]  " << o.detail << "\n";
  }
  if (failed == 0) {
    os << "ALL CHECKS PASSED\n";
  } else {
    os << failed << " OF " << outcomes.size() << " CHECKS FAILED\n";
  }
  return os.str();
}

const std::set<std::string>& exercised() { return touched(); }

const std::vector<std::string>& public_operations() {
  static const std::vector<std::string> ops = {
      "adjacent", "link", "star", "induced", "product", "is_continuous", "are_isomorphic", "connected_components",
      "valence", "cycle", "complete", "cone", "suspension", "sphere", "join", "is_simple_vertex", "is_simple_edge",
      "apply_move", "is_simple_contractible", "reduce_core", "verify_deletion_schedule", "check_equivalent",
      "clique_complex", "boundary_matrix", "smith_normal_form", "reduced_homology", "euler_characteristic",
      "is_digital_sphere", "is_digital_homology_sphere", "mu", "hopf_map", "fiber", "phi_bar", "trivialization",
      "verify_fiber_bundle", "search_unital_multiplication", "embed", "is_digital_group",
      "verify_completeness_theorem"};
  return ops;
}

}  // namespace tolspace::acceptance
