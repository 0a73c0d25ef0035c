#include "tolspace/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tolspace {

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(f.n);
  for (auto w : f.code) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

void refine_colouring(const Graph& g, std::vector<int>& colour) {
  const int n = g.size();
  if (n == 0) return;
  int cells = *std::max_element(colour.begin(), colour.end()) + 1;
  std::vector<std::vector<int>> signature(n);
  std::vector<int> idx(n);
  while (true) {
    for (int v = 0; v < n; ++v) {
      auto& sig = signature[v];
      sig.clear();
      sig.push_back(colour[v]);
      for (int w : g.neighbors(v)) sig.push_back(colour[w]);
      std::sort(sig.begin() + 1, sig.end());
    }
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return signature[a] < signature[b]; });
    int next = 0;
    for (int k = 0; k < n; ++k) {
      if (k > 0 && signature[idx[k]] != signature[idx[k - 1]]) ++next;
      colour[idx[k]] = next;
    }
    if (next + 1 == cells) break;
    cells = next + 1;
  }
}

namespace {

// Splits cell `c` so that each vertex in `picked` gets colour c and the rest
// of the cell c + 1; later cells shift up by one.
std::vector<int> individualise(const std::vector<int>& colour, int c, std::initializer_list<int> picked) {
  std::vector<int> out(colour.size());
  for (std::size_t v = 0; v < colour.size(); ++v) out[v] = colour[v] > c ? colour[v] + 1 : colour[v];
  for (std::size_t v = 0; v < colour.size(); ++v) {
    if (colour[v] == c && std::find(picked.begin(), picked.end(), static_cast<int>(v)) == picked.end()) out[v] = c + 1;
  }
  return out;
}

// First cell of minimum size > 1, or -1 when the colouring is discrete.
int target_cell(const std::vector<int>& colour, std::vector<int>& members) {
  const int cells = colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
  std::vector<int> size(cells, 0);
  for (int c : colour) ++size[c];
  int best = -1;
  for (int c = 0; c < cells; ++c) {
    if (size[c] > 1 && (best == -1 || size[c] < size[best])) best = c;
  }
  members.clear();
  if (best >= 0) {
    for (std::size_t v = 0; v < colour.size(); ++v)
      if (colour[v] == best) members.push_back(static_cast<int>(v));
  }
  return best;
}

std::vector<std::uint64_t> encode(const Graph& g, const std::vector<int>& order) {
  const int n = g.size();
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<std::uint64_t> code((bits + 63) / 64, 0);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      // Most significant bit first so integer order matches bit-string order.
      if (g.has_edge(order[i], order[j])) code[k / 64] |= std::uint64_t{1} << (63 - (k % 64));
    }
  }
  return code;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g) {}

  CanonicalLabeling run() {
    std::vector<int> colour(g_.size(), 0);
    std::vector<int> fixed;
    search(std::move(colour), fixed);
    return {{g_.size(), best_code_}, best_order_};
  }

 private:
  void leaf(const std::vector<int>& colour) {
    std::vector<int> order(colour.size());
    for (std::size_t v = 0; v < colour.size(); ++v) order[colour[v]] = static_cast<int>(v);
    auto code = encode(g_, order);
    if (!have_best_ || code < best_code_) {
      best_code_ = std::move(code);
      best_order_ = std::move(order);
      have_best_ = true;
    } else if (code == best_code_) {
      std::vector<int> gamma(order.size());
      for (std::size_t k = 0; k < order.size(); ++k) gamma[order[k]] = best_order_[k];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  // Orbit test under the automorphisms found so far that fix `fixed`.
  bool same_orbit_as_any(int v, const std::vector<int>& tried, const std::vector<int>& fixed) const {
    if (tried.empty() || automorphisms_.empty()) return false;
    std::vector<int> parent(g_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(fixed.begin(), fixed.end(), [&](int f) { return gamma[f] == f; });
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < g_.size(); ++x) parent[find(x)] = find(gamma[x]);
    }
    if (!any) return false;
    const int root = find(v);
    return std::any_of(tried.begin(), tried.end(), [&](int t) { return find(t) == root; });
  }

  void search(std::vector<int> colour, std::vector<int>& fixed) {
    refine_colouring(g_, colour);
    std::vector<int> members;
    const int cell = target_cell(colour, members);
    if (cell < 0) {
      leaf(colour);
      return;
    }
    std::vector<int> tried;
    for (int v : members) {
      if (same_orbit_as_any(v, tried, fixed)) continue;
      tried.push_back(v);
      fixed.push_back(v);
      search(individualise(colour, cell, {v}), fixed);
      fixed.pop_back();
    }
  }

  const Graph& g_;
  bool have_best_ = false;
  std::vector<std::uint64_t> best_code_;
  std::vector<int> best_order_;
  std::vector<std::vector<int>> automorphisms_;
};

bool twins(const Graph& g, int a, int b) {
  for (int w = 0; w < g.size(); ++w) {
    if (w == a || w == b) continue;
    if (g.has_edge(a, w) != g.has_edge(b, w)) return false;
  }
  return true;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& a, const Graph& b) : a_(a), b_(b), n_(a.size()), u_(2 * a.size()) {
    for (int x = 0; x < n_; ++x) {
      for (int y : a.neighbors(x))
        if (y > x) u_.add_edge(x, y);
      for (int y : b.neighbors(x))
        if (y > x) u_.add_edge(n_ + x, n_ + y);
    }
  }

  std::optional<std::vector<int>> run() {
    std::vector<int> colour(2 * n_, 0);
    return search(std::move(colour));
  }

 private:
  std::optional<std::vector<int>> search(std::vector<int> colour) {
    refine_colouring(u_, colour);
    const int cells = *std::max_element(colour.begin(), colour.end()) + 1;
    std::vector<int> in_a(cells, 0), in_b(cells, 0);
    for (int v = 0; v < n_; ++v) ++in_a[colour[v]];
    for (int v = n_; v < 2 * n_; ++v) ++in_b[colour[v]];
    if (in_a != in_b) return std::nullopt;

    int cell = -1;
    for (int c = 0; c < cells; ++c)
      if (in_a[c] > 1 && (cell == -1 || in_a[c] < in_a[cell])) cell = c;

    if (cell < 0) {
      std::vector<int> image(n_);
      std::vector<int> b_of(cells);
      for (int v = n_; v < 2 * n_; ++v) b_of[colour[v]] = v - n_;
      for (int v = 0; v < n_; ++v) image[v] = b_of[colour[v]];
      for (int x = 0; x < n_; ++x)
        for (int y = x + 1; y < n_; ++y)
          if (a_.has_edge(x, y) != b_.has_edge(image[x], image[y])) return std::nullopt;
      return image;
    }

    int u = -1;
    std::vector<int> candidates;
    for (int v = 0; v < n_; ++v)
      if (colour[v] == cell && u == -1) u = v;
    for (int v = n_; v < 2 * n_; ++v)
      if (colour[v] == cell) candidates.push_back(v);

    std::vector<int> tried;
    for (int w : candidates) {
      bool redundant = std::any_of(tried.begin(), tried.end(), [&](int t) { return twins(b_, t - n_, w - n_); });
      if (redundant) continue;
      tried.push_back(w);
      if (auto found = search(individualise(colour, cell, {u, w}))) return found;
    }
    return std::nullopt;
  }

  const Graph& a_;
  const Graph& b_;
  int n_;
  Graph u_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.empty()) return {{0, {}}, {}};
  return CanonicalSearch(g).run();
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return std::nullopt;
  if (a.empty()) return std::vector<int>{};
  std::vector<int> da(a.size()), db(b.size());
  for (int v = 0; v < a.size(); ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;
  return IsomorphismSearch(a, b).run();
}

std::optional<std::map<std::string, std::string, LabelLess>> are_isomorphic(const ToleranceSpace& x,
                                                                           const ToleranceSpace& y) {
  auto image = find_isomorphism(x.graph(), y.graph());
  if (!image) return std::nullopt;
  std::map<std::string, std::string, LabelLess> out;
  for (std::size_t v = 0; v < image->size(); ++v) out.emplace(x.labels()[v], y.labels()[(*image)[v]]);
  return out;
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
  std::map<CanonicalForm, Graph> level;
  level.emplace(canonical_form(Graph(0)), Graph(0));
  for (int k = 1; k <= n; ++k) {
    std::map<CanonicalForm, Graph> next;
    for (const auto& [form, g] : level) {
      const int prev = g.size();
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << prev); ++mask) {
        Graph h(k);
        for (int x = 0; x < prev; ++x)
          for (int y : g.neighbors(x))
            if (y > x) h.add_edge(x, y);
        for (int x = 0; x < prev; ++x)
          if (mask & (std::uint32_t{1} << x)) h.add_edge(x, prev);
        auto lab = canonical_labeling(h);
        if (!next.contains(lab.form)) next.emplace(lab.form, h.induced(lab.order));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [form, g] : level)
    if (!connected_only || is_connected(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace tolspace
