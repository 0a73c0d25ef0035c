#include "tolspace/homology.hpp"

#include <algorithm>

#include "tolspace/error.hpp"

namespace tolspace {

namespace {

void extend(const Graph& g, std::vector<int>& clique, std::vector<int>& candidates, int limit,
            std::vector<std::vector<int>>& cells) {
  const std::size_t d = clique.size() - 1;
  if (cells.size() <= d) cells.resize(d + 1);
  cells[d].insert(cells[d].end(), clique.begin(), clique.end());
  if (static_cast<int>(d) == limit) return;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const int v = candidates[k];
    std::vector<int> next;
    for (std::size_t m = k + 1; m < candidates.size(); ++m)
      if (g.has_edge(v, candidates[m])) next.push_back(candidates[m]);
    clique.push_back(v);
    extend(g, clique, next, limit, cells);
    clique.pop_back();
  }
}

}  // namespace

CliqueComplex::CliqueComplex(const Graph& g, std::optional<int> max_dim) {
  const int limit = max_dim.value_or(g.size());
  if (limit < 0) return;
  // Extending each clique only by larger common neighbours emits every
  // dimension in lexicographic order, so no sorting or hashing is needed.
  for (int v = 0; v < g.size(); ++v) {
    std::vector<int> clique{v};
    std::vector<int> candidates;
    for (int w : g.neighbors(v))
      if (w > v) candidates.push_back(w);
    extend(g, clique, candidates, limit, cells_);
  }
}

std::size_t CliqueComplex::count(int d) const {
  if (d < 0 || d > dimension()) return 0;
  return cells_[d].size() / (d + 1);
}

std::span<const int> CliqueComplex::simplex(int d, std::size_t k) const {
  if (d < 0 || d > dimension() || k >= count(d)) throw InvalidArgument("simplex index out of range");
  return {cells_[d].data() + k * (d + 1), static_cast<std::size_t>(d + 1)};
}

std::optional<std::size_t> CliqueComplex::index_of(std::span<const int> s) const {
  const int d = static_cast<int>(s.size()) - 1;
  if (d < 0 || d > dimension()) return std::nullopt;
  std::size_t lo = 0, hi = count(d);
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto t = simplex(d, mid);
    if (std::lexicographical_compare(t.begin(), t.end(), s.begin(), s.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < count(d) && std::ranges::equal(simplex(d, lo), s)) return lo;
  return std::nullopt;
}

std::vector<std::size_t> CliqueComplex::f_vector() const {
  std::vector<std::size_t> out;
  for (int d = 0; d <= dimension(); ++d) out.push_back(count(d));
  return out;
}

SparseMatrix CliqueComplex::boundary(int d) const {
  if (d < 1 || d > dimension()) throw InvalidArgument("boundary: dimension " + std::to_string(d) + " out of range");
  SparseMatrix m(static_cast<int>(count(d - 1)), static_cast<int>(count(d)));
  std::vector<int> face(static_cast<std::size_t>(d));
  std::vector<std::pair<int, std::int64_t>> entries;
  for (std::size_t k = 0; k < count(d); ++k) {
    auto s = simplex(d, k);
    entries.clear();
    for (int r = 0; r <= d; ++r) {
      std::size_t pos = 0;
      for (int t = 0; t <= d; ++t)
        if (t != r) face[pos++] = s[t];
      auto row = index_of(face);
      entries.emplace_back(static_cast<int>(*row), r % 2 == 0 ? 1 : -1);
    }
    std::sort(entries.begin(), entries.end());
    for (const auto& [row, v] : entries) m.push(static_cast<int>(k), row, v);
  }
  return m;
}

CliqueComplex clique_complex(const ToleranceSpace& x, std::optional<int> max_dim) {
  return CliqueComplex(x.graph(), max_dim);
}

bool boundary_squares_to_zero(const CliqueComplex& k) {
  for (int d = 2; d <= k.dimension(); ++d) {
    if (multiply(k.boundary(d - 1), k.boundary(d)).nonzeros() != 0) return false;
  }
  return true;
}

bool HomologyProfile::is_sphere(int n) const {
  if (n < 0 || static_cast<std::size_t>(n) >= groups.size()) return false;
  for (std::size_t d = 0; d < groups.size(); ++d) {
    const bool want = static_cast<int>(d) == n;
    if (!groups[d].torsion.empty() || groups[d].betti != (want ? 1U : 0U)) return false;
  }
  return true;
}

bool HomologyProfile::is_acyclic() const {
  return !groups.empty() && std::all_of(groups.begin(), groups.end(), [](const auto& h) { return h.trivial(); });
}

std::string HomologyProfile::str() const {
  std::string out = "{";
  for (std::size_t d = 0; d < groups.size(); ++d) {
    if (d > 0) out += ", ";
    out += std::to_string(d) + ": ";
    const auto& h = groups[d];
    if (h.trivial()) {
      out += "0";
      continue;
    }
    std::string term;
    if (h.betti == 1) term = "Z";
    if (h.betti > 1) term = "Z^" + std::to_string(h.betti);
    for (const auto& t : h.torsion) {
      if (!term.empty()) term += " x ";
      term += "Z/" + t.str();
    }
    out += term;
  }
  return out + "}";
}

HomologyProfile reduced_homology(const CliqueComplex& k) {
  HomologyProfile out;
  const int top = k.dimension();
  if (top < 0) return out;
  // rank[d] = rank of ∂_d; ∂_0 is the augmentation, rank 1 on a non-empty complex.
  std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 2, 0);
  std::vector<std::vector<BigInt>> factors(static_cast<std::size_t>(top) + 2);
  rank[0] = 1;
  for (int d = 1; d <= top; ++d) {
    auto snf = smith_normal_form(k.boundary(d));
    rank[d] = snf.rank;
    factors[d] = std::move(snf.factors);
  }
  out.groups.resize(static_cast<std::size_t>(top) + 1);
  for (int d = 0; d <= top; ++d) {
    auto& h = out.groups[d];
    h.betti = k.count(d) - rank[d] - rank[d + 1];
    for (const auto& f : factors[d + 1])
      if (f > 1) h.torsion.push_back(f);
  }
  return out;
}

HomologyProfile reduced_homology(const Graph& g) { return reduced_homology(CliqueComplex(g)); }
HomologyProfile reduced_homology(const ToleranceSpace& x) { return reduced_homology(x.graph()); }

std::int64_t euler_characteristic(const CliqueComplex& k) {
  std::int64_t chi = 0;
  for (int d = 0; d <= k.dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(k.count(d));
  return chi;
}

std::int64_t euler_characteristic(const Graph& g) { return euler_characteristic(CliqueComplex(g)); }
std::int64_t euler_characteristic(const ToleranceSpace& x) { return euler_characteristic(x.graph()); }

}  // namespace tolspace
