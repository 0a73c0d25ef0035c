#include "tolspace/smith.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "tolspace/error.hpp"

namespace tolspace {

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), columns_(static_cast<std::size_t>(cols)) {}

void SparseMatrix::push(int c, int row, std::int64_t value) {
  if (value == 0) return;
  auto& col = columns_.at(static_cast<std::size_t>(c));
  if (row < 0 || row >= rows_ || (!col.empty() && col.back().first >= row)) {
    throw InvalidArgument("SparseMatrix::push: rows must be in range and increasing");
  }
  col.emplace_back(row, value);
}

std::int64_t SparseMatrix::at(int r, int c) const {
  const auto& col = column(c);
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, int row) { return e.first < row; });
  return (it != col.end() && it->first == r) ? it->second : 0;
}

std::size_t SparseMatrix::nonzeros() const noexcept {
  std::size_t total = 0;
  for (const auto& c : columns_) total += c.size();
  return total;
}

DenseMatrix SparseMatrix::to_dense() const {
  DenseMatrix out(static_cast<std::size_t>(rows_), std::vector<std::int64_t>(columns_.size(), 0));
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (const auto& [r, v] : columns_[c]) out[r][c] = v;
  return out;
}

SparseMatrix SparseMatrix::from_dense(const DenseMatrix& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  SparseMatrix out(rows, cols);
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) out.push(c, r, m[r][c]);
  return out;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("multiply: shape mismatch");
  SparseMatrix out(a.rows(), b.cols());
  std::vector<std::int64_t> acc(static_cast<std::size_t>(a.rows()));
  for (int c = 0; c < b.cols(); ++c) {
    std::fill(acc.begin(), acc.end(), 0);
    for (const auto& [k, v] : b.column(c))
      for (const auto& [r, w] : a.column(k)) acc[r] += v * w;
    for (int r = 0; r < a.rows(); ++r) out.push(c, r, acc[r]);
  }
  return out;
}

namespace {

/// int64 that throws instead of wrapping.
struct Checked {
  std::int64_t v = 0;

  Checked() = default;
  Checked(std::int64_t x) : v(x) {}  // NOLINT(google-explicit-constructor)

  friend Checked operator+(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v, b.v, &r)) throw ArithmeticOverflow("int64 overflow in addition");
    return r;
  }
  friend Checked operator-(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw ArithmeticOverflow("int64 overflow in subtraction");
    return r;
  }
  friend Checked operator*(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw ArithmeticOverflow("int64 overflow in multiplication");
    return r;
  }
  friend Checked operator/(Checked a, Checked b) {
    if (a.v == std::numeric_limits<std::int64_t>::min() && b.v == -1) throw ArithmeticOverflow("int64 overflow in division");
    return a.v / b.v;
  }
  friend Checked operator%(Checked a, Checked b) {
    if (b.v == -1) return 0;
    return a.v % b.v;
  }
  friend bool operator==(Checked a, Checked b) { return a.v == b.v; }
  friend bool operator<(Checked a, Checked b) { return a.v < b.v; }
};

Checked magnitude(Checked a) {
  if (a.v == std::numeric_limits<std::int64_t>::min()) throw ArithmeticOverflow("int64 overflow in abs");
  return a.v < 0 ? -a.v : a.v;
}
BigInt magnitude(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

BigInt to_big(const Checked& a) { return BigInt(a.v); }
BigInt to_big(const BigInt& a) { return a; }

bool is_zero(const Checked& a) { return a.v == 0; }
bool is_zero(const BigInt& a) { return a.is_zero(); }
bool is_unit(const Checked& a) { return a.v == 1 || a.v == -1; }
bool is_unit(const BigInt& a) { return a == 1 || a == -1; }

template <class Int>
using Column = std::vector<std::pair<int, Int>>;

// Sparse elimination of unit pivots. Each pivot contributes an invariant
// factor of 1; the rest of the matrix is handed to the dense stage.
template <class Int>
class UnitEliminator {
 public:
  explicit UnitEliminator(const SparseMatrix& m) : rows_(m.rows()), cols_(static_cast<std::size_t>(m.cols())) {
    row_cols_.resize(static_cast<std::size_t>(m.rows()));
    for (int c = 0; c < m.cols(); ++c) {
      for (const auto& [r, v] : m.column(c)) {
        cols_[c].emplace_back(r, Int(v));
        row_cols_[r].insert(c);
      }
    }
  }

  std::size_t run() {
    std::size_t pivots = 0;
    while (true) {
      int pc = -1, pr = -1;
      std::size_t best = std::numeric_limits<std::size_t>::max();
      for (std::size_t c = 0; c < cols_.size() && best > 0; ++c) {
        const auto& col = cols_[c];
        for (const auto& [r, v] : col) {
          if (!is_unit(v)) continue;
          std::size_t cost = (row_cols_[r].size() - 1) * (col.size() - 1);
          if (cost < best) {
            best = cost;
            pc = static_cast<int>(c);
            pr = r;
            if (cost == 0) break;
          }
        }
      }
      if (pc < 0) break;
      pivot(pr, pc);
      ++pivots;
    }
    return pivots;
  }

  std::vector<std::vector<Int>> remainder() const {
    std::vector<int> live_cols;
    std::set<int> live_rows;
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if (cols_[c].empty()) continue;
      live_cols.push_back(static_cast<int>(c));
      for (const auto& e : cols_[c]) live_rows.insert(e.first);
    }
    std::vector<int> rows(live_rows.begin(), live_rows.end());
    std::vector<std::vector<Int>> out(rows.size(), std::vector<Int>(live_cols.size(), Int(0)));
    for (std::size_t j = 0; j < live_cols.size(); ++j) {
      for (const auto& [r, v] : cols_[live_cols[j]]) {
        auto i = std::lower_bound(rows.begin(), rows.end(), r) - rows.begin();
        out[i][j] = v;
      }
    }
    return out;
  }

 private:
  Int value_at(int r, int c) const {
    const auto& col = cols_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, int row) { return e.first < row; });
    return it->second;
  }

  void pivot(int r, int c) {
    const Int u = value_at(r, c);
    std::vector<int> others;
    for (int c2 : row_cols_[r])
      if (c2 != c) others.push_back(c2);
    for (int c2 : others) {
      // col c2 -= (a * u) * col c clears entry (r, c2) because u * u = 1.
      const Int factor = value_at(r, c2) * u;
      axpy(c2, factor, c);
    }
    for (const auto& e : cols_[c]) row_cols_[e.first].erase(c);
    cols_[c].clear();
  }

  void axpy(int target, const Int& factor, int source) {
    const auto& src = cols_[source];
    auto& dst = cols_[target];
    Column<Int> merged;
    merged.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
      if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
        merged.push_back(dst[i++]);
      } else if (i == dst.size() || src[j].first < dst[i].first) {
        const int r = src[j].first;
        merged.emplace_back(r, Int(0) - factor * src[j].second);
        row_cols_[r].insert(target);
        ++j;
      } else {
        const int r = dst[i].first;
        Int v = dst[i].second - factor * src[j].second;
        if (is_zero(v)) {
          row_cols_[r].erase(target);
        } else {
          merged.emplace_back(r, std::move(v));
        }
        ++i;
        ++j;
      }
    }
    dst = std::move(merged);
  }

  int rows_;
  std::vector<Column<Int>> cols_;
  std::vector<std::set<int>> row_cols_;
};

template <class Int>
std::vector<Int> dense_invariant_factors(std::vector<std::vector<Int>> a) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  std::vector<Int> factors;

  auto row_op = [&](std::size_t target, const Int& q, std::size_t source, std::size_t from) {
    for (std::size_t j = from; j < n; ++j)
      if (!is_zero(a[source][j])) a[target][j] = a[target][j] - q * a[source][j];
  };
  auto col_op = [&](std::size_t target, const Int& q, std::size_t source, std::size_t from) {
    for (std::size_t i = from; i < m; ++i)
      if (!is_zero(a[i][source])) a[i][target] = a[i][target] - q * a[i][source];
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest-magnitude pivot in the trailing block.
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (!is_zero(a[i][j]) && (pi == m || magnitude(a[i][j]) < magnitude(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    std::swap(a[t], a[pi]);
    for (auto& row : a) std::swap(row[t], row[pj]);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (is_zero(a[i][t])) continue;
        row_op(i, a[i][t] / a[t][t], t, t);
        if (!is_zero(a[i][t])) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (is_zero(a[t][j])) continue;
        col_op(j, a[t][j] / a[t][t], t, t);
        if (!is_zero(a[t][j])) clean = false;
      }
      if (!clean) {
        // A remainder survived: move the smallest one in row/column t to the pivot.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (!is_zero(a[i][t]) && magnitude(a[i][t]) < magnitude(a[bi][bj])) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (!is_zero(a[t][j]) && magnitude(a[t][j]) < magnitude(a[bi][bj])) {
            bi = t;
            bj = j;
          }
        if (bi != t) std::swap(a[t], a[bi]);
        if (bj != t)
          for (auto& row : a) std::swap(row[t], row[bj]);
        continue;
      }
      // Pivot must divide the whole trailing block; otherwise fold the
      // offending row in and reduce again.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!is_zero(a[i][j] % a[t][t])) {
            bad = i;
            break;
          }
      if (bad == m) break;
      row_op(t, Int(-1), bad, t);
    }
    factors.push_back(magnitude(a[t][t]));
  }
  return factors;
}

template <class Int>
SmithResult run_smith(const SparseMatrix& m) {
  UnitEliminator<Int> elim(m);
  const std::size_t units = elim.run();
  auto rest = dense_invariant_factors<Int>(elim.remainder());
  SmithResult out;
  out.rank = units + rest.size();
  out.factors.assign(units, BigInt(1));
  for (const auto& f : rest) out.factors.push_back(to_big(f));
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

}  // namespace

SmithResult smith_normal_form_checked(const SparseMatrix& m) { return run_smith<Checked>(m); }

SmithResult smith_normal_form_bigint(const SparseMatrix& m) {
  auto out = run_smith<BigInt>(m);
  out.used_bigint = true;
  return out;
}

SmithResult smith_normal_form(const SparseMatrix& m) {
  try {
    return smith_normal_form_checked(m);
  } catch (const ArithmeticOverflow&) {
    return smith_normal_form_bigint(m);
  }
}

SmithResult smith_normal_form(const DenseMatrix& m) { return smith_normal_form(SparseMatrix::from_dense(m)); }

}  // namespace tolspace
