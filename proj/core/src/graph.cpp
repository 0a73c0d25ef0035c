#include "tolspace/graph.hpp"

#include <bit>
#include <cassert>
#include <numeric>

namespace tolspace {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * ((n + 63) / 64), 0) {}

void Graph::add_edge(int u, int v) {
  assert(u != v);
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) {
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

int Graph::degree(int v) const noexcept {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  auto r = row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t total = 0;
  for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total / 2;
}

Graph Graph::induced(std::span<const int> keep) const {
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (has_edge(keep[i], keep[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return h;
}

Graph Graph::without_vertex(int v) const {
  std::vector<int> keep;
  keep.reserve(n_ > 0 ? n_ - 1 : 0);
  for (int u = 0; u < n_; ++u)
    if (u != v) keep.push_back(u);
  return induced(keep);
}

Graph Graph::link(int v) const { return induced(neighbors(v)); }

std::vector<int> component_ids(const Graph& g, int* count) {
  std::vector<int> id(g.size(), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.size(); ++s) {
    if (id[s] != -1) continue;
    id[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (id[w] == -1) {
          id[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return id;
}

bool is_connected(const Graph& g) {
  if (g.empty()) return false;
  int count = 0;
  component_ids(g, &count);
  return count == 1;
}

int universal_vertex(const Graph& g) {
  for (int v = 0; v < g.size(); ++v)
    if (g.degree(v) == g.size() - 1) return v;
  return -1;
}

bool is_complete(const Graph& g) {
  return g.edge_count() == static_cast<std::size_t>(g.size()) * (g.size() - 1) / 2;
}

std::vector<int> cycle_order(const Graph& g) {
  const int n = g.size();
  if (n < 3 || g.edge_count() != static_cast<std::size_t>(n)) return {};
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 2) return {};
  std::vector<int> order{0};
  int prev = -1, cur = 0;
  while (true) {
    auto nb = g.neighbors(cur);
    int next = nb[0] != prev ? nb[0] : nb[1];
    if (prev == -1) next = nb[0];
    if (next == 0) break;
    order.push_back(next);
    prev = cur;
    cur = next;
    if (static_cast<int>(order.size()) > n) return {};
  }
  if (static_cast<int>(order.size()) != n) return {};
  return order;
}

}  // namespace tolspace
