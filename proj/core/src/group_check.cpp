#include "tolspace/group_check.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "tolspace/canonical.hpp"
#include "tolspace/error.hpp"

namespace tolspace {

MultiplicationTable::MultiplicationTable(ToleranceSpace carrier, std::string identity, Table table)
    : carrier_(std::move(carrier)), identity_(std::move(identity)), table_(std::move(table)) {
  carrier_.index_of(identity_);
  for (const auto& [a, row] : table_) {
    carrier_.index_of(a);
    for (const auto& [b, c] : row) {
      carrier_.index_of(b);
      carrier_.index_of(c);
    }
  }
  for (const auto& a : carrier_.labels()) {
    auto it = table_.find(a);
    if (it == table_.end()) throw InvalidArgument("table is not total: no row for '" + a + "'");
    for (const auto& b : carrier_.labels())
      if (!it->second.contains(b)) throw InvalidArgument("table is not total: no entry for " + a + "·" + b);
  }
}

const std::string& MultiplicationTable::operator()(std::string_view a, std::string_view b) const {
  auto row = table_.find(a);
  if (row == table_.end()) throw UnknownLabel(std::string(a));
  auto it = row->second.find(b);
  if (it == row->second.end()) throw UnknownLabel(std::string(b));
  return it->second;
}

namespace {

// Index form of a table for the exhaustive loops.
struct IndexTable {
  int n = 0;
  int e = 0;
  std::vector<int> op;  // op[a * n + b]
  int at(int a, int b) const { return op[static_cast<std::size_t>(a) * n + b]; }
};

IndexTable index_table(const MultiplicationTable& t) {
  const auto& x = t.carrier();
  IndexTable out;
  out.n = static_cast<int>(x.size());
  out.e = x.index_of(t.identity());
  out.op.resize(static_cast<std::size_t>(out.n) * out.n);
  for (int a = 0; a < out.n; ++a)
    for (int b = 0; b < out.n; ++b) out.op[a * out.n + b] = x.index_of(t(x.label(a), x.label(b)));
  return out;
}

bool close(const Graph& g, int a, int b) { return a == b || g.has_edge(a, b); }

GroupCheck check(const IndexTable& m, const Graph& g, const std::vector<std::string>& name) {
  GroupCheck out;
  const int n = m.n;
  for (int a = 0; a < n; ++a) {
    if (m.at(m.e, a) != a || m.at(a, m.e) != a) {
      out.failed = "identity";
      out.witness = {name[a]};
      out.message = name[m.e] + " is not a two-sided identity for " + name[a];
      return out;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (m.at(m.at(a, b), c) != m.at(a, m.at(b, c))) {
          out.failed = "associativity";
          out.witness = {name[a], name[b], name[c]};
          out.message = "(ab)c != a(bc)";
          return out;
        }
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n && !found; ++b) found = m.at(a, b) == m.e && m.at(b, a) == m.e;
    if (!found) {
      out.failed = "inverse";
      out.witness = {name[a]};
      out.message = name[a] + " has no two-sided inverse";
      return out;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!close(g, a, b)) continue;
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (!close(g, c, d) || close(g, m.at(a, c), m.at(b, d))) continue;
          out.failed = "continuity";
          out.witness = {name[a], name[b], name[c], name[d]};
          out.message = name[a] + "~" + name[b] + " and " + name[c] + "~" + name[d] + " but " + name[m.at(a, c)] +
                        " and " + name[m.at(b, d)] + " are not adjacent";
          return out;
        }
    }
  out.ok = true;
  return out;
}

bool fast_continuous(const FiniteGroup& grp, const Graph& g, const std::vector<int>& at) {
  // at[k] = vertex of element k; checks continuity only (axioms hold).
  const int n = grp.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!close(g, at[a], at[b])) continue;
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          if (close(g, at[c], at[d]) && !close(g, at[grp.op[a][c]], at[grp.op[b][d]])) return false;
    }
  return true;
}

}  // namespace

GroupCheck is_digital_group(const MultiplicationTable& t) {
  return check(index_table(t), t.carrier().graph(), t.carrier().labels());
}

bool verify_completeness_theorem(const MultiplicationTable& t) {
  if (!is_digital_group(t).ok) throw InvalidArgument("verify_completeness_theorem: not a digital group");
  if (!is_connected(t.carrier())) throw InvalidArgument("verify_completeness_theorem: carrier is not connected");
  return is_complete(t.carrier().graph());
}

bool star_of_identity_is_complete_subgroup(const MultiplicationTable& t) {
  const auto m = index_table(t);
  const Graph& g = t.carrier().graph();
  std::vector<int> st = g.neighbors(m.e);
  st.push_back(m.e);
  auto member = [&](int v) { return std::find(st.begin(), st.end(), v) != st.end(); };
  for (int a : st)
    for (int b : st) {
      if (a != b && !g.has_edge(a, b)) return false;
      if (!member(m.at(a, b))) return false;
    }
  for (int a : st) {
    bool inv = false;
    for (int b : st) inv = inv || m.at(a, b) == m.e;
    if (!inv) return false;
  }
  return true;
}

FiniteGroup cyclic_group(int n) {
  FiniteGroup out{"Z" + std::to_string(n), std::vector<std::vector<int>>(n, std::vector<int>(n))};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out.op[a][b] = (a + b) % n;
  return out;
}

std::vector<FiniteGroup> small_groups() {
  // Up to isomorphism: cyclic groups of every order, the Klein four-group,
  // and the symmetric group S3 (the only non-abelian group of order <= 6).
  std::vector<FiniteGroup> out;
  for (int n = 1; n <= 3; ++n) out.push_back(cyclic_group(n));
  out.push_back(cyclic_group(4));
  FiniteGroup klein{"Z2xZ2", std::vector<std::vector<int>>(4, std::vector<int>(4))};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) klein.op[a][b] = a ^ b;
  out.push_back(klein);
  out.push_back(cyclic_group(5));
  out.push_back(cyclic_group(6));
  // S3 as permutations of {0,1,2}, listed with the identity first.
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  FiniteGroup s3{"S3", std::vector<std::vector<int>>(6, std::vector<int>(6))};
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int k = 0; k < 3; ++k) c[k] = perms[a][perms[b][k]];
      s3.op[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  out.push_back(s3);
  return out;
}

MultiplicationTable place_group(const FiniteGroup& group, const Graph& g, const std::vector<int>& placement) {
  const int n = group.order();
  if (g.size() != n || static_cast<int>(placement.size()) != n) throw InvalidArgument("place_group: size mismatch");
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  for (int u = 0; u < n; ++u)
    for (int w : g.neighbors(u))
      if (w > u) edges.emplace_back(labels[u], labels[w]);
  MultiplicationTable::Table table;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[labels[placement[a]]][labels[placement[b]]] = labels[placement[group.op[a][b]]];
  return MultiplicationTable(ToleranceSpace(labels, edges), labels[placement[0]], std::move(table));
}

GroupSweepReport sweep_small_groups(int max_order) {
  GroupSweepReport out;
  const auto groups = small_groups();
  for (int n = 1; n <= max_order; ++n) {
    const auto graphs = enumerate_graphs(n, true);
    for (const auto& grp : groups) {
      if (grp.order() != n) continue;
      for (const auto& g : graphs) {
        ++out.pairs;
        std::vector<int> placement(n);
        std::iota(placement.begin(), placement.end(), 0);
        bool admitted = false;
        do {
          ++out.placements;
          if (!fast_continuous(grp, g, placement)) continue;
          ++out.continuous;
          admitted = true;
          auto t = place_group(grp, g, placement);
          if (!verify_completeness_theorem(t)) out.all_complete = false;
          if (!star_of_identity_is_complete_subgroup(t)) out.stars_complete_subgroups = false;
        } while (std::next_permutation(placement.begin(), placement.end()));
        if (admitted) {
          out.found.push_back(grp.name + " on " + std::to_string(n) + " vertices, " + std::to_string(g.edge_count()) +
                              " edges");
        }
      }
    }
  }
  return out;
}

}  // namespace tolspace
