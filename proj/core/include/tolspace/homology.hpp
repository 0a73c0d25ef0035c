#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tolspace/smith.hpp"
#include "tolspace/space.hpp"

namespace tolspace {

/// Cliques of a graph graded by dimension. Each dimension is stored flat
/// (stride d + 1) in lexicographic order of ascending vertex tuples.
class CliqueComplex {
 public:
  CliqueComplex() = default;
  /// All cliques with at most max_dim + 1 vertices (unbounded by default).
  explicit CliqueComplex(const Graph& g, std::optional<int> max_dim = std::nullopt);

  /// Top dimension, -1 for the empty complex.
  int dimension() const noexcept { return static_cast<int>(cells_.size()) - 1; }
  std::size_t count(int d) const;
  std::span<const int> simplex(int d, std::size_t k) const;
  /// Position of a sorted vertex tuple within its dimension.
  std::optional<std::size_t> index_of(std::span<const int> simplex) const;

  /// Simplex counts per dimension.
  std::vector<std::size_t> f_vector() const;

  /// ∂_d for 1 <= d <= dimension(): one column per d-simplex, entry (-1)^r
  /// at the face that omits the r-th vertex.
  SparseMatrix boundary(int d) const;

 private:
  std::vector<std::vector<int>> cells_;
};

CliqueComplex clique_complex(const ToleranceSpace& x, std::optional<int> max_dim = std::nullopt);

/// True iff ∂_d ∘ ∂_{d+1} vanishes in every degree.
bool boundary_squares_to_zero(const CliqueComplex& k);

struct HomologyGroup {
  std::size_t betti = 0;
  /// Invariant factors > 1, each dividing the next.
  std::vector<BigInt> torsion;

  bool trivial() const { return betti == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup&) const = default;
};

/// Reduced integral homology in degrees 0..dim of the clique complex.
/// The empty space has an empty profile.
struct HomologyProfile {
  std::vector<HomologyGroup> groups;

  /// Z in degree n and zero elsewhere.
  bool is_sphere(int n) const;
  bool is_acyclic() const;
  const HomologyGroup& at(std::size_t d) const { return groups.at(d); }
  /// "{0: 0, 1: Z, 2: Z^2 x Z/2}"
  std::string str() const;
  bool operator==(const HomologyProfile&) const = default;
};

HomologyProfile reduced_homology(const CliqueComplex& k);
HomologyProfile reduced_homology(const ToleranceSpace& x);
HomologyProfile reduced_homology(const Graph& g);

/// Alternating clique count (unreduced).
std::int64_t euler_characteristic(const CliqueComplex& k);
std::int64_t euler_characteristic(const ToleranceSpace& x);
std::int64_t euler_characteristic(const Graph& g);

}  // namespace tolspace
