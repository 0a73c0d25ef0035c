#include "tolspace/lattice_embed.hpp"

#include <algorithm>
#include <cstdlib>

#include "tolspace/error.hpp"

namespace tolspace {

LatticeEmbedding embed(const ToleranceSpace& x) {
  if (x.empty()) throw InvalidArgument("embed: the space is empty");
  const int n = static_cast<int>(x.size());
  LatticeEmbedding out;
  out.dimension = n - 1;
  out.order = x.labels();
  std::vector<std::vector<int>> pos(n, std::vector<int>(static_cast<std::size_t>(n - 1), 0));
  for (int k = 1; k < n; ++k) {
    for (int w = 0; w < k; ++w) pos[w][k - 1] = x.graph().has_edge(w, k) ? 0 : -1;
    pos[k][k - 1] = 1;
  }
  for (int v = 0; v < n; ++v) out.coords.emplace(x.label(v), std::move(pos[v]));
  return out;
}

ToleranceSpace digital_image(const LatticeEmbedding& e) {
  std::vector<std::string> labels;
  std::vector<const std::vector<int>*> points;
  for (const auto& [label, p] : e.coords) {
    if (static_cast<int>(p.size()) != e.dimension) throw InvalidArgument("coordinate of '" + label + "' has wrong dimension");
    labels.push_back(label);
    points.push_back(&p);
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      int dist = 0;
      for (int k = 0; k < e.dimension; ++k) dist = std::max(dist, std::abs((*points[a])[k] - (*points[b])[k]));
      if (dist == 0) throw InvalidArgument("'" + labels[a] + "' and '" + labels[b] + "' share a lattice point");
      if (dist <= 1) edges.emplace_back(labels[a], labels[b]);
    }
  return ToleranceSpace(std::move(labels), edges);
}

}  // namespace tolspace
