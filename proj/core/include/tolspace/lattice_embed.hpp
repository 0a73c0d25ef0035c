#pragma once

#include <map>
#include <string>
#include <vector>

#include "tolspace/space.hpp"

namespace tolspace {

/// Vertex positions in the hypercube [-1, 1]^dimension.
struct LatticeEmbedding {
  int dimension = 0;
  /// Insertion order used by the construction (label order).
  std::vector<std::string> order;
  std::map<std::string, std::vector<int>, LabelLess> coords;
};

/// Inductive embedding: the k-th vertex (k >= 1) opens coordinate k, where it
/// sits at 1; earlier neighbours get 0 there and earlier non-neighbours -1.
/// Dimension is |X| - 1. Throws InvalidArgument on the empty space.
LatticeEmbedding embed(const ToleranceSpace& x);

/// Points as a tolerance space under maximal adjacency: distinct points are
/// adjacent iff their Chebyshev distance is at most 1.
ToleranceSpace digital_image(const LatticeEmbedding& e);

}  // namespace tolspace
