#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tolspace/graph.hpp"
#include "tolspace/label.hpp"

namespace tolspace {

using Edge = std::pair<std::string, std::string>;

/// A finite tolerance space: labelled vertices plus a symmetric, irreflexive
/// edge set. Reflexivity of the tolerance is implicit, so adjacent(v, v) holds
/// without a stored self-pair.
///
/// Labels are kept in natural label order and vertex index k is the k-th label
/// in that order; every algorithm iterates in this order.
class ToleranceSpace {
 public:
  ToleranceSpace() = default;

  /// Validates uniqueness of labels, edge endpoints and the absence of
  /// self-pairs. Duplicate edges (in either orientation) are rejected.
  ToleranceSpace(std::vector<std::string> vertices, const std::vector<Edge>& edges);

  /// Wraps an index graph. `labels` must already be unique and sorted by
  /// LabelLess; vertex i of `g` carries labels[i].
  static ToleranceSpace from_graph(std::vector<std::string> labels, Graph g);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  const std::vector<std::string>& labels() const& noexcept { return labels_; }
  // By value on temporaries, so `for (v : cycle(8).labels())` does not dangle.
  std::vector<std::string> labels() && { return std::move(labels_); }
  const std::string& label(int index) const { return labels_.at(static_cast<std::size_t>(index)); }
  const Graph& graph() const noexcept { return graph_; }

  bool contains(std::string_view label) const noexcept { return find(label).has_value(); }
  std::optional<int> find(std::string_view label) const noexcept;
  /// Throws UnknownLabel.
  int index_of(std::string_view label) const;

  /// Edges as label pairs, each with first < second in label order, sorted.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const noexcept { return graph_.edge_count(); }

  bool operator==(const ToleranceSpace&) const = default;

 private:
  std::vector<std::string> labels_;
  Graph graph_;
};

/// Reflexive adjacency: true iff u == v or {u, v} is an edge.
bool adjacent(const ToleranceSpace& x, std::string_view u, std::string_view v);

int valence(const ToleranceSpace& x, std::string_view v);
std::vector<std::string> neighbors(const ToleranceSpace& x, std::string_view v);

ToleranceSpace induced(const ToleranceSpace& x, const std::vector<std::string>& subset);
ToleranceSpace link(const ToleranceSpace& x, std::string_view v);
ToleranceSpace star(const ToleranceSpace& x, std::string_view v);
ToleranceSpace remove_vertex(const ToleranceSpace& x, std::string_view v);

std::vector<std::vector<std::string>> connected_components(const ToleranceSpace& x);
bool is_connected(const ToleranceSpace& x);

/// Graph union: vertex sets and edge sets are united; shared labels are
/// identified.
ToleranceSpace union_of(const ToleranceSpace& a, const ToleranceSpace& b);

/// Renames vertices. `rename` must be injective on x's labels; labels missing
/// from it are kept.
ToleranceSpace relabel(const ToleranceSpace& x, const std::map<std::string, std::string, LabelLess>& rename);

struct ProductLabel {
  std::string left;
  std::string right;

  /// "(left,right)"; nested products nest the parentheses.
  std::string str() const { return "(" + left + "," + right + ")"; }
};

/// Strong product: (x,y) ~ (x',y') iff x ≈ x' and y ≈ y' (equal or adjacent)
/// and the pairs differ.
ToleranceSpace product(const ToleranceSpace& x, const ToleranceSpace& y);

/// A vertex assignment between two spaces. Total on the domain; every image
/// exists in the codomain.
class ToleranceMap {
 public:
  using Assignment = std::map<std::string, std::string, LabelLess>;

  ToleranceMap(ToleranceSpace domain, ToleranceSpace codomain, Assignment assignment);

  const ToleranceSpace& domain() const noexcept { return domain_; }
  const ToleranceSpace& codomain() const noexcept { return codomain_; }
  const Assignment& assignment() const noexcept { return assignment_; }

  const std::string& operator()(std::string_view v) const;

  /// Domain labels mapped to `b`, in label order.
  std::vector<std::string> preimage(std::string_view b) const;
  bool is_surjective() const;

 private:
  ToleranceSpace domain_;
  ToleranceSpace codomain_;
  Assignment assignment_;
};

/// Every domain edge lands on equal or adjacent codomain vertices.
bool is_continuous(const ToleranceMap& f);

/// g ∘ f. Requires f's codomain to equal g's domain.
ToleranceMap compose(const ToleranceMap& g, const ToleranceMap& f);

/// A domain edge whose image breaks continuity, if any.
std::optional<Edge> continuity_witness(const ToleranceMap& f);

}  // namespace tolspace
