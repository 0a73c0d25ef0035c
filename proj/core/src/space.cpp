#include "tolspace/space.hpp"

#include <algorithm>
#include <set>

#include "tolspace/error.hpp"

namespace tolspace {

ToleranceSpace::ToleranceSpace(std::vector<std::string> vertices, const std::vector<Edge>& edges) {
  std::sort(vertices.begin(), vertices.end(), LabelLess{});
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i - 1] == vertices[i]) throw InvalidArgument("duplicate vertex label '" + vertices[i] + "'");
  }
  labels_ = std::move(vertices);
  graph_ = Graph(static_cast<int>(labels_.size()));
  for (const auto& [a, b] : edges) {
    if (a == b) throw InvalidArgument("self-pair '" + a + "' in edge list");
    int u = index_of(a);
    int v = index_of(b);
    if (graph_.has_edge(u, v)) throw InvalidArgument("duplicate edge {" + a + "," + b + "}");
    graph_.add_edge(u, v);
  }
}

ToleranceSpace ToleranceSpace::from_graph(std::vector<std::string> labels, Graph g) {
  ToleranceSpace x;
  x.labels_ = std::move(labels);
  x.graph_ = std::move(g);
  return x;
}

std::optional<int> ToleranceSpace::find(std::string_view label) const noexcept {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label, LabelLess{});
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

int ToleranceSpace::index_of(std::string_view label) const {
  auto idx = find(label);
  if (!idx) throw UnknownLabel(std::string(label));
  return *idx;
}

std::vector<Edge> ToleranceSpace::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < graph_.size(); ++u) {
    for (int v : graph_.neighbors(u)) {
      if (v > u) out.emplace_back(labels_[u], labels_[v]);
    }
  }
  return out;
}

bool adjacent(const ToleranceSpace& x, std::string_view u, std::string_view v) {
  int a = x.index_of(u);
  int b = x.index_of(v);
  return a == b || x.graph().has_edge(a, b);
}

int valence(const ToleranceSpace& x, std::string_view v) { return x.graph().degree(x.index_of(v)); }

std::vector<std::string> neighbors(const ToleranceSpace& x, std::string_view v) {
  std::vector<std::string> out;
  for (int w : x.graph().neighbors(x.index_of(v))) out.push_back(x.label(w));
  return out;
}

namespace {

ToleranceSpace induced_by_index(const ToleranceSpace& x, const std::vector<int>& keep) {
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (int k : keep) labels.push_back(x.label(k));
  return ToleranceSpace::from_graph(std::move(labels), x.graph().induced(keep));
}

}  // namespace

ToleranceSpace induced(const ToleranceSpace& x, const std::vector<std::string>& subset) {
  std::vector<int> keep;
  keep.reserve(subset.size());
  for (const auto& s : subset) keep.push_back(x.index_of(s));
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  return induced_by_index(x, keep);
}

ToleranceSpace link(const ToleranceSpace& x, std::string_view v) {
  return induced_by_index(x, x.graph().neighbors(x.index_of(v)));
}

ToleranceSpace star(const ToleranceSpace& x, std::string_view v) {
  int idx = x.index_of(v);
  auto keep = x.graph().neighbors(idx);
  keep.insert(std::lower_bound(keep.begin(), keep.end(), idx), idx);
  return induced_by_index(x, keep);
}

ToleranceSpace remove_vertex(const ToleranceSpace& x, std::string_view v) {
  int idx = x.index_of(v);
  std::vector<int> keep;
  for (int u = 0; u < static_cast<int>(x.size()); ++u)
    if (u != idx) keep.push_back(u);
  return induced_by_index(x, keep);
}

std::vector<std::vector<std::string>> connected_components(const ToleranceSpace& x) {
  int count = 0;
  auto ids = component_ids(x.graph(), &count);
  std::vector<std::vector<std::string>> out(static_cast<std::size_t>(count));
  for (std::size_t v = 0; v < ids.size(); ++v) out[ids[v]].push_back(x.labels()[v]);
  return out;
}

bool is_connected(const ToleranceSpace& x) { return is_connected(x.graph()); }

ToleranceSpace union_of(const ToleranceSpace& a, const ToleranceSpace& b) {
  std::set<std::string, LabelLess> labels(a.labels().begin(), a.labels().end());
  labels.insert(b.labels().begin(), b.labels().end());
  std::set<Edge> edges;
  for (const auto* s : {&a, &b}) {
    for (auto [u, v] : s->edges()) {
      if (label_less(v, u)) std::swap(u, v);
      edges.emplace(std::move(u), std::move(v));
    }
  }
  return ToleranceSpace({labels.begin(), labels.end()}, {edges.begin(), edges.end()});
}

ToleranceSpace relabel(const ToleranceSpace& x, const std::map<std::string, std::string, LabelLess>& rename) {
  auto name = [&](const std::string& l) -> const std::string& {
    auto it = rename.find(l);
    return it == rename.end() ? l : it->second;
  };
  std::vector<std::string> labels;
  labels.reserve(x.size());
  for (const auto& l : x.labels()) labels.push_back(name(l));
  std::vector<Edge> edges;
  for (const auto& [u, v] : x.edges()) edges.emplace_back(name(u), name(v));
  return ToleranceSpace(std::move(labels), edges);
}

ToleranceSpace product(const ToleranceSpace& x, const ToleranceSpace& y) {
  const int nx = static_cast<int>(x.size());
  const int ny = static_cast<int>(y.size());
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(nx) * ny);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) labels.push_back(ProductLabel{x.label(i), y.label(j)}.str());
  // Product labels need not sort in (i, j) order, so build the index graph
  // on the (i, j) layout first and then permute into label order.
  std::vector<int> order(labels.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return label_less(labels[a], labels[b]); });
  std::vector<int> position(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = static_cast<int>(k);
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (labels[order[k - 1]] == labels[order[k]]) {
      throw InvalidArgument("product label collision on '" + labels[order[k]] + "'");
    }
  }

  Graph g(nx * ny);
  auto close = [](const Graph& h, int a, int b) { return a == b || h.has_edge(a, b); };
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      const int a = i * ny + j;
      for (int i2 = i; i2 < nx; ++i2) {
        if (!close(x.graph(), i, i2)) continue;
        for (int j2 = 0; j2 < ny; ++j2) {
          const int b = i2 * ny + j2;
          if (b <= a || !close(y.graph(), j, j2)) continue;
          g.add_edge(position[a], position[b]);
        }
      }
    }
  }
  std::vector<std::string> sorted;
  sorted.reserve(labels.size());
  for (int k : order) sorted.push_back(std::move(labels[k]));
  return ToleranceSpace::from_graph(std::move(sorted), std::move(g));
}

ToleranceMap::ToleranceMap(ToleranceSpace domain, ToleranceSpace codomain, Assignment assignment)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), assignment_(std::move(assignment)) {
  for (const auto& [from, to] : assignment_) {
    if (!domain_.contains(from)) throw UnknownLabel(from);
    if (!codomain_.contains(to)) throw UnknownLabel(to);
  }
  for (const auto& v : domain_.labels()) {
    if (!assignment_.contains(v)) throw InvalidArgument("map is not total: no image for '" + v + "'");
  }
}

const std::string& ToleranceMap::operator()(std::string_view v) const {
  auto it = assignment_.find(v);
  if (it == assignment_.end()) throw UnknownLabel(std::string(v));
  return it->second;
}

std::vector<std::string> ToleranceMap::preimage(std::string_view b) const {
  codomain_.index_of(b);
  std::vector<std::string> out;
  for (const auto& [from, to] : assignment_)
    if (to == b) out.push_back(from);
  return out;
}

bool ToleranceMap::is_surjective() const {
  std::set<std::string, LabelLess> hit;
  for (const auto& [from, to] : assignment_) hit.insert(to);
  return hit.size() == codomain_.size();
}

std::optional<Edge> continuity_witness(const ToleranceMap& f) {
  for (const auto& [u, v] : f.domain().edges()) {
    if (!adjacent(f.codomain(), f(u), f(v))) return Edge{u, v};
  }
  return std::nullopt;
}

bool is_continuous(const ToleranceMap& f) { return !continuity_witness(f).has_value(); }

ToleranceMap compose(const ToleranceMap& g, const ToleranceMap& f) {
  if (!(f.codomain() == g.domain())) throw InvalidArgument("compose: codomain of f differs from domain of g");
  ToleranceMap::Assignment out;
  for (const auto& [from, mid] : f.assignment()) out.emplace(from, g(mid));
  return ToleranceMap(f.domain(), g.codomain(), std::move(out));
}

}  // namespace tolspace
