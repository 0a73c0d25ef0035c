#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tolspace/group_check.hpp"
#include "tolspace/moves.hpp"
#include "tolspace/space.hpp"

namespace tolspace {

/// Points of the four-point circle, in cyclic order 1 -> i -> -1 -> -i -> 1.
enum class S4Element { One, I, MinusOne, MinusI };

const char* label(S4Element e);
S4Element successor(S4Element e);
/// Reflexive adjacency on the four-point circle.
bool adjacent(S4Element a, S4Element b);

/// mu(i, j) from s = (i + j - 2) mod 8: {0,1} -> 1, {2,3} -> i, {4,5} -> -1,
/// {6,7} -> -i. Indices are 1..8.
S4Element mu(int i, int j);
/// The same values read off the contour figure cell by cell.
S4Element mu_table(int i, int j);
/// Cells where the closed form and the table disagree, as (i, j).
std::vector<std::pair<int, int>> mu_disagreements();

/// S^1_4 on labels "1", "i", "-1", "-i".
ToleranceSpace circle4();
/// S^2 = suspension of circle4() with poles "A" and "B".
ToleranceSpace hopf_base();
/// S^1_8 * S^1_8 on x1..x8 and y1..y8 with apexes "A" (left) and "B" (right).
ToleranceSpace hopf_total();
/// The fibre S^1_8 on u1..u8.
ToleranceSpace hopf_fiber();

/// Hμ(x,B) = A, Hμ(A,y) = B, Hμ(x_i,y_j) = mu(i,j). Throws Error when the
/// closed form and the transcribed table ever disagree.
ToleranceMap hopf_map();

/// Induced subspace of the domain over b. Throws InvalidArgument when b is
/// not hit (p is not surjective there).
ToleranceSpace fiber(const ToleranceMap& p, std::string_view b);

/// The doubling map x1..x8 -> circle4(): 1,2 -> 1; 3,4 -> i; 5,6 -> -1; 7,8 -> -i.
ToleranceMap phi_bar();

/// Two 8-cycles 1..8 and 1'..8' with rungs k-k' and diagonals k-(k+1)'.
ToleranceSpace equator_fiber_model();

enum class Chart { Upper, Lower };
const char* to_string(Chart c);
/// "upper"/"U1" or "lower"/"U2"; throws InvalidArgument otherwise.
Chart parse_chart(std::string_view s);

/// Base points of a hemisphere: the pole and the equator.
std::vector<std::string> chart_points(Chart c);

/// Vertex deletions leaving one copy of the fibre: the circle points of the
/// cone factor crossed with the fibre, cone point by cone point in cyclic
/// order. For the preimage of the upper chart this is (x_b, y_a) in a-major
/// order; for chart x F it is (c, u_b) with c running over the equator.
std::vector<std::string> chart_preimage_schedule(Chart c);
std::vector<std::string> chart_product_schedule(Chart c);

struct Trivialization {
  Chart chart = Chart::Upper;
  ToleranceSpace chart_space;
  /// Hμ^{-1}(chart).
  ToleranceSpace preimage;
  /// Strong product of a cone on S^1_8 with S^1_8.
  ToleranceSpace cone_product;
  bool preimage_is_cone_product = false;
  /// chart x F.
  ToleranceSpace product;
  /// Comparison map preimage -> chart x F. Upper: (x_i,y_j) -> (mu(i,j), u_i)
  /// and (x_i,B) -> (A, u_i). Lower: (x_i,y_j) -> (mu(i,j), u_j) and
  /// (A,y_j) -> (B, u_j). On the cone coordinate this is φ̄ sheared by the
  /// fibre index, so that π1 ∘ φ = Hμ.
  std::optional<ToleranceMap> phi;
  bool phi_continuous = false;
  bool commutes = false;
  std::size_t points_checked = 0;
};

Trivialization trivialization(Chart c);

struct ChartSpec {
  std::string name;
  std::vector<std::string> base_points;
  /// Comparison map p^{-1}(V) -> V x F. Built as (p, constant) when absent.
  std::optional<ToleranceMap> phi;
  EquivalenceHints hints;
};

struct FiberCheck {
  std::string base;
  std::size_t size = 0;
  EquivalenceVerdict verdict;
};

struct ChartCheck {
  std::string name;
  std::vector<std::string> base_points;
  std::size_t preimage_size = 0;
  std::size_t product_size = 0;
  EquivalenceVerdict equivalence;
  bool phi_supplied = false;
  bool phi_continuous = false;
  bool commutes = false;
  std::size_t points_checked = 0;
  /// A point where π1 ∘ φ and p differ, if any.
  std::optional<std::string> commutation_witness;
};

struct BundleReport {
  bool pass = false;
  bool continuous = false;
  std::vector<FiberCheck> fibers;
  std::vector<ChartCheck> charts;
  /// Failing clauses, each naming the base point or chart involved.
  std::vector<std::string> failures;
};

/// Checks every clause of the fibre bundle definition: each fibre ≈ F, each
/// base point inside some chart, each chart preimage ≈ V x F, and a
/// continuous φ with π1 ∘ φ = p. Throws InvalidArgument when p is not
/// surjective; an uncovered base point is reported as a failing clause.
BundleReport verify_fiber_bundle(const ToleranceMap& p, const ToleranceSpace& f, const std::vector<ChartSpec>& charts,
                                 const EquivalenceBudget& budget, SearchContext& ctx);
BundleReport verify_fiber_bundle(const ToleranceMap& p, const ToleranceSpace& f, const std::vector<ChartSpec>& charts,
                                 const EquivalenceBudget& budget = {});

/// Hμ against F = S^1_8 over the two hemispheres, with the constructed φ and
/// the deletion schedules as hints.
std::vector<ChartSpec> hopf_charts();
BundleReport verify_hopf_bundle(SearchContext& ctx);
BundleReport verify_hopf_bundle();

/// First continuous m: S x S -> S with m(x, unit) = m(unit, x) = x, in
/// lexicographic order of the free cells, or nothing. Throws InvalidArgument
/// when |S| > 8. `nodes` receives the number of partial assignments tried.
std::optional<MultiplicationTable> search_unital_multiplication(const ToleranceSpace& s, std::string_view unit,
                                                                std::size_t* nodes = nullptr);

}  // namespace tolspace
