#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tolspace/graph.hpp"
#include "tolspace/label.hpp"
#include "tolspace/space.hpp"

namespace tolspace {

/// Isomorphism-invariant encoding of a graph: the upper triangle of the
/// adjacency matrix under the canonical vertex order, packed row-major.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint64_t> code;

  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept;
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// order[k] is the vertex placed at canonical position k.
  std::vector<int> order;
};

/// Individualisation-refinement search over equitable partitions, keeping
/// the lexicographically smallest leaf code. Branches are pruned with the
/// automorphisms discovered on the way.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

/// Refines an ordered colouring to the coarsest equitable one. `colour` holds
/// cell indices 0..k-1; cells keep their relative order.
void refine_colouring(const Graph& g, std::vector<int>& colour);

/// Isomorphism a -> b (result[v] is the image of v) found by joint
/// refinement of the disjoint union and backtracking.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

/// Label bijection X -> Y preserving adjacency both ways, or nothing.
/// Deterministic for fixed inputs.
std::optional<std::map<std::string, std::string, LabelLess>> are_isomorphic(const ToleranceSpace& x,
                                                                           const ToleranceSpace& y);

/// All graphs on n vertices up to isomorphism, each in canonical vertex order,
/// sorted by canonical code. Intended for n <= 8.
std::vector<Graph> enumerate_graphs(int n, bool connected_only);

}  // namespace tolspace
