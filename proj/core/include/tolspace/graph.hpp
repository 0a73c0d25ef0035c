#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tolspace {

/// Unlabeled simple graph on vertices 0..n-1 with bit-row adjacency.
/// This is the structural view the search and homology code works on;
/// ToleranceSpace attaches labels to it.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }
  int words() const noexcept { return words_; }

  bool has_edge(int u, int v) const noexcept {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  std::span<const std::uint64_t> row(int v) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }

  int degree(int v) const noexcept;
  std::vector<int> neighbors(int v) const;
  std::size_t edge_count() const noexcept;

  /// Induced subgraph on `keep`. Vertex k of the result is keep[k], so the
  /// order of `keep` is preserved.
  Graph induced(std::span<const int> keep) const;
  Graph without_vertex(int v) const;
  /// Subgraph induced on the neighbours of v, in ascending order.
  Graph link(int v) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

bool is_connected(const Graph& g);
/// Component id per vertex; ids are numbered by smallest member.
std::vector<int> component_ids(const Graph& g, int* count = nullptr);
/// Smallest vertex adjacent to every other vertex, or -1.
int universal_vertex(const Graph& g);
bool is_complete(const Graph& g);
/// Vertices in cyclic order when g is a single cycle of length >= 3, else empty.
/// The walk starts at 0 and heads towards its smaller neighbour.
std::vector<int> cycle_order(const Graph& g);

}  // namespace tolspace
