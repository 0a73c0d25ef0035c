#include "tolspace/moves.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include "tolspace/error.hpp"

namespace tolspace {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::Unknown:
      return "unknown";
  }
  return "?";
}

const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::DeleteVertex:
      return "delete_vertex";
    case MoveKind::AttachVertex:
      return "attach_vertex";
    case MoveKind::DeleteEdge:
      return "delete_edge";
    case MoveKind::AttachEdge:
      return "attach_edge";
  }
  return "?";
}

const char* to_string(EquivalenceKind k) {
  switch (k) {
    case EquivalenceKind::Equivalent:
      return "equivalent";
    case EquivalenceKind::NotEquivalent:
      return "not_equivalent";
    case EquivalenceKind::Unknown:
      return "unknown";
  }
  return "?";
}

SearchContext::SearchContext(SearchLimits limits)
    : limits_(limits), contractible_(limits.cache_capacity), spheres_(limits.cache_capacity) {}

void SearchContext::charge() {
  ++nodes_;
  if (budget_open_ && nodes_ > deadline_) {
    throw BudgetExhausted("budget exhausted after " + std::to_string(limits_.max_nodes) + " search nodes");
  }
}

SearchContext::Budget::Budget(SearchContext& ctx) : ctx_(ctx), owner_(!ctx.budget_open_) {
  if (owner_) {
    ctx_.budget_open_ = true;
    ctx_.deadline_ = ctx_.nodes_ + ctx_.limits_.max_nodes;
  }
}

SearchContext::Budget::~Budget() {
  if (owner_) ctx_.budget_open_ = false;
}

// ---------------------------------------------------------------------------
// Contractibility on index graphs

namespace {

bool contractible_rec(const Graph& g, SearchContext& ctx, std::vector<int>* schedule) {
  ctx.charge();
  const int n = g.size();
  if (n == 0) return false;
  if (n == 1) return true;
  if (const int apex = universal_vertex(g); apex >= 0) {
    // A cone: every other vertex has the apex as a cone point of its link.
    if (schedule)
      for (int v = 0; v < n; ++v)
        if (v != apex) schedule->push_back(v);
    return true;
  }
  if (!is_connected(g)) return false;

  std::optional<CanonicalForm> key;
  if (n <= ctx.limits().memo_max_vertices) {
    key = canonical_form(g);
    if (auto hit = ctx.contractible_memo().get(*key)) {
      if (!*hit || !schedule) return *hit;
    }
  }
  auto remember = [&](bool value) {
    if (key) ctx.contractible_memo().put(*key, value);
    return value;
  };
  // Simple moves preserve the Euler characteristic, and a point has 1.
  if (euler_characteristic(g) != 1) return remember(false);

  // Smallest simple vertex first; the first branch is the greedy run.
  std::vector<int> rest;
  for (int v = 0; v < n; ++v) {
    if (!contractible_rec(g.link(v), ctx, nullptr)) continue;
    rest.clear();
    if (contractible_rec(g.without_vertex(v), ctx, schedule ? &rest : nullptr)) {
      if (schedule) {
        schedule->push_back(v);
        for (int s : rest) schedule->push_back(s < v ? s : s + 1);
      }
      return remember(true);
    }
  }
  return remember(false);
}

Graph induced_on(const Graph& g, const std::vector<int>& keep) { return g.induced(keep); }

}  // namespace

bool graph_contractible(const Graph& g, SearchContext& ctx, std::vector<int>* schedule) {
  SearchContext::Budget scope(ctx);
  return contractible_rec(g, ctx, schedule);
}

bool graph_simple_vertex(const Graph& g, int v, SearchContext& ctx) { return graph_contractible(g.link(v), ctx); }

std::vector<int> common_neighbors(const Graph& g, int u, int w) {
  std::vector<int> out;
  auto ru = g.row(u);
  auto rw = g.row(w);
  for (int k = 0; k < g.words(); ++k) {
    std::uint64_t bits = ru[k] & rw[k];
    while (bits) {
      out.push_back(k * 64 + __builtin_ctzll(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

bool graph_simple_edge(const Graph& g, int u, int w, SearchContext& ctx) {
  return graph_contractible(induced_on(g, common_neighbors(g, u, w)), ctx);
}

// ---------------------------------------------------------------------------
// Moves

namespace {

std::vector<std::string> sorted_labels(std::vector<std::string> v) {
  std::sort(v.begin(), v.end(), LabelLess{});
  return v;
}

Edge ordered_edge(std::string u, std::string w) {
  if (label_less(w, u)) std::swap(u, w);
  return {std::move(u), std::move(w)};
}

std::string join_labels(const std::vector<std::string>& v) {
  std::string out = "{";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + v[k];
  return out + "}";
}

}  // namespace

Move Move::delete_vertex(std::string v, std::vector<std::string> nbrs) {
  Move m;
  m.kind = MoveKind::DeleteVertex;
  m.vertex = std::move(v);
  m.neighbors = sorted_labels(std::move(nbrs));
  return m;
}

Move Move::attach_vertex(std::string v, std::vector<std::string> nbrs) {
  Move m;
  m.kind = MoveKind::AttachVertex;
  m.vertex = std::move(v);
  m.neighbors = sorted_labels(std::move(nbrs));
  return m;
}

Move Move::delete_edge(std::string u, std::string w) {
  Move m;
  m.kind = MoveKind::DeleteEdge;
  m.edge = ordered_edge(std::move(u), std::move(w));
  return m;
}

Move Move::attach_edge(std::string u, std::string w) {
  Move m;
  m.kind = MoveKind::AttachEdge;
  m.edge = ordered_edge(std::move(u), std::move(w));
  return m;
}

Move Move::inverse() const {
  switch (kind) {
    case MoveKind::DeleteVertex:
      if (neighbors.empty()) throw InvalidArgument("cannot invert a vertex deletion without its neighbours");
      return attach_vertex(vertex, neighbors);
    case MoveKind::AttachVertex:
      return delete_vertex(vertex, neighbors);
    case MoveKind::DeleteEdge:
      return attach_edge(edge.first, edge.second);
    case MoveKind::AttachEdge:
      return delete_edge(edge.first, edge.second);
  }
  return *this;
}

std::string Move::str() const {
  switch (kind) {
    case MoveKind::DeleteVertex:
      return "delete vertex " + vertex;
    case MoveKind::AttachVertex:
      return "attach vertex " + vertex + " to " + join_labels(neighbors);
    case MoveKind::DeleteEdge:
      return "delete edge " + edge.first + "-" + edge.second;
    case MoveKind::AttachEdge:
      return "attach edge " + edge.first + "-" + edge.second;
  }
  return "?";
}

Move recorded(const ToleranceSpace& x, Move m) {
  if (m.kind == MoveKind::DeleteVertex && m.neighbors.empty()) m.neighbors = neighbors(x, m.vertex);
  return m;
}

std::optional<std::string> move_defect(const ToleranceSpace& x, const Move& m, SearchContext& ctx) {
  switch (m.kind) {
    case MoveKind::DeleteVertex: {
      auto v = x.find(m.vertex);
      if (!v) return "vertex '" + m.vertex + "' is not in the space";
      if (!m.neighbors.empty() && m.neighbors != neighbors(x, m.vertex)) {
        return "recorded neighbours of '" + m.vertex + "' do not match the space";
      }
      if (!graph_simple_vertex(x.graph(), *v, ctx)) return "vertex '" + m.vertex + "' is not simple: its link is not simple digitally contractible";
      return std::nullopt;
    }
    case MoveKind::AttachVertex: {
      if (x.contains(m.vertex)) return "vertex '" + m.vertex + "' already exists";
      std::vector<int> keep;
      for (const auto& n : m.neighbors) {
        auto idx = x.find(n);
        if (!idx) return "neighbour '" + n + "' is not in the space";
        keep.push_back(*idx);
      }
      std::sort(keep.begin(), keep.end());
      if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) return "repeated neighbour";
      if (!graph_contractible(x.graph().induced(keep), ctx)) {
        return "attached vertex '" + m.vertex + "' would not be simple: neighbour set " + join_labels(m.neighbors) +
               " is not simple digitally contractible";
      }
      return std::nullopt;
    }
    case MoveKind::DeleteEdge:
    case MoveKind::AttachEdge: {
      auto u = x.find(m.edge.first);
      auto w = x.find(m.edge.second);
      if (!u) return "vertex '" + m.edge.first + "' is not in the space";
      if (!w) return "vertex '" + m.edge.second + "' is not in the space";
      if (*u == *w) return "an edge needs two distinct vertices";
      const bool present = x.graph().has_edge(*u, *w);
      const std::string name = m.edge.first + "-" + m.edge.second;
      if (m.kind == MoveKind::DeleteEdge && !present) return "edge " + name + " is not in the space";
      if (m.kind == MoveKind::AttachEdge && present) return "edge " + name + " already exists";
      // The common link does not depend on the edge itself, so the check is
      // the same before and after the move.
      if (!graph_simple_edge(x.graph(), *u, *w, ctx)) {
        return "edge " + name + " is not simple: common link is not simple digitally contractible";
      }
      return std::nullopt;
    }
  }
  return "unknown move kind";
}

namespace {

ToleranceSpace apply_unchecked(const ToleranceSpace& x, const Move& m) {
  switch (m.kind) {
    case MoveKind::DeleteVertex:
      return remove_vertex(x, m.vertex);
    case MoveKind::AttachVertex: {
      auto labels = x.labels();
      labels.push_back(m.vertex);
      auto edges = x.edges();
      for (const auto& n : m.neighbors) edges.emplace_back(m.vertex, n);
      return ToleranceSpace(std::move(labels), edges);
    }
    case MoveKind::DeleteEdge:
    case MoveKind::AttachEdge: {
      Graph g = x.graph();
      const int u = x.index_of(m.edge.first);
      const int w = x.index_of(m.edge.second);
      if (m.kind == MoveKind::DeleteEdge) {
        g.remove_edge(u, w);
      } else {
        g.add_edge(u, w);
      }
      return ToleranceSpace::from_graph(x.labels(), std::move(g));
    }
  }
  return x;
}

}  // namespace

ToleranceSpace apply_move(const ToleranceSpace& x, const Move& m, SearchContext& ctx) {
  if (auto defect = move_defect(x, m, ctx)) throw InvalidMove("invalid move (" + m.str() + "): " + *defect);
  return apply_unchecked(x, m);
}

ToleranceSpace apply_move(const ToleranceSpace& x, const Move& m) {
  SearchContext ctx;
  return apply_move(x, m, ctx);
}

std::size_t MoveTrace::peak_size() const {
  std::size_t size = start.size();
  std::size_t peak = size;
  for (const auto& m : moves) {
    if (m.kind == MoveKind::AttachVertex) ++size;
    if (m.kind == MoveKind::DeleteVertex) --size;
    peak = std::max(peak, size);
  }
  return peak;
}

std::optional<std::string> trace_defect(const MoveTrace& t, SearchContext& ctx) {
  ToleranceSpace x = t.start;
  for (std::size_t k = 0; k < t.moves.size(); ++k) {
    if (auto defect = move_defect(x, t.moves[k], ctx)) {
      return "step " + std::to_string(k + 1) + " (" + t.moves[k].str() + "): " + *defect;
    }
    x = apply_unchecked(x, t.moves[k]);
  }
  if (!(x == t.end)) return std::string("replayed space differs from the recorded end");
  return std::nullopt;
}

std::optional<std::string> trace_defect(const MoveTrace& t) {
  SearchContext ctx;
  return trace_defect(t, ctx);
}

MoveTrace reversed(const MoveTrace& t) {
  MoveTrace out{t.end, {}, t.start};
  for (auto it = t.moves.rbegin(); it != t.moves.rend(); ++it) out.moves.push_back(it->inverse());
  return out;
}

bool is_simple_vertex(const ToleranceSpace& x, std::string_view v, SearchContext& ctx) {
  return graph_simple_vertex(x.graph(), x.index_of(v), ctx);
}

bool is_simple_vertex(const ToleranceSpace& x, std::string_view v) {
  SearchContext ctx;
  return is_simple_vertex(x, v, ctx);
}

bool is_simple_edge(const ToleranceSpace& x, std::string_view u, std::string_view w, SearchContext& ctx) {
  const int a = x.index_of(u);
  const int b = x.index_of(w);
  if (a == b || !x.graph().has_edge(a, b)) {
    throw InvalidArgument("{" + std::string(u) + "," + std::string(w) + "} is not an edge");
  }
  return graph_simple_edge(x.graph(), a, b, ctx);
}

bool is_simple_edge(const ToleranceSpace& x, std::string_view u, std::string_view w) {
  SearchContext ctx;
  return is_simple_edge(x, u, w, ctx);
}

ContractibilityResult is_simple_contractible(const ToleranceSpace& x, SearchContext& ctx) {
  ContractibilityResult out;
  const std::size_t before = ctx.nodes();
  try {
    std::vector<int> schedule;
    const bool yes = graph_contractible(x.graph(), ctx, &schedule);
    out.verdict = yes ? Verdict::Yes : Verdict::No;
    if (yes) {
      MoveTrace t{x, {}, x};
      for (int idx : schedule) {
        const std::string& v = x.label(idx);
        t.moves.push_back(recorded(t.end, Move::delete_vertex(v)));
        t.end = remove_vertex(t.end, v);
      }
      out.witness = std::move(t);
    }
  } catch (const BudgetExhausted&) {
    out.verdict = Verdict::Unknown;
  }
  out.nodes = ctx.nodes() - before;
  return out;
}

ContractibilityResult is_simple_contractible(const ToleranceSpace& x) {
  SearchContext ctx;
  return is_simple_contractible(x, ctx);
}

// ---------------------------------------------------------------------------
// Core reduction and schedules

namespace {

std::optional<Move> next_reduction(const ToleranceSpace& x, SearchContext& ctx) {
  const Graph& g = x.graph();
  for (int v = 0; v < g.size(); ++v) {
    if (graph_simple_vertex(g, v, ctx)) return recorded(x, Move::delete_vertex(x.label(v)));
  }
  for (int u = 0; u < g.size(); ++u)
    for (int w : g.neighbors(u))
      if (w > u && graph_simple_edge(g, u, w, ctx)) return Move::delete_edge(x.label(u), x.label(w));
  return std::nullopt;
}

}  // namespace

CoreReduction reduce_core(const ToleranceSpace& x, SearchContext& ctx) {
  CoreReduction out{x, {x, {}, x}};
  while (auto m = next_reduction(out.core, ctx)) {
    out.core = apply_unchecked(out.core, *m);
    out.trace.moves.push_back(std::move(*m));
  }
  out.trace.end = out.core;
  return out;
}

CoreReduction reduce_core(const ToleranceSpace& x) {
  SearchContext ctx;
  return reduce_core(x, ctx);
}

bool is_move_free(const ToleranceSpace& x, SearchContext& ctx) { return !next_reduction(x, ctx).has_value(); }

ScheduleReport verify_deletion_schedule(const ToleranceSpace& x, const std::vector<std::string>& order,
                                        SearchContext& ctx) {
  std::set<std::string, LabelLess> seen;
  for (const auto& v : order) {
    x.index_of(v);
    if (!seen.insert(v).second) throw InvalidArgument("schedule repeats '" + v + "'");
  }
  ScheduleReport out;
  out.ok = true;
  out.residue = x;
  out.trace = {x, {}, x};
  for (const auto& v : order) {
    const bool simple = is_simple_vertex(out.residue, v, ctx);
    out.steps.push_back({v, simple});
    if (!simple) {
      out.ok = false;
      break;
    }
    out.trace.moves.push_back(recorded(out.residue, Move::delete_vertex(v)));
    out.residue = remove_vertex(out.residue, v);
  }
  out.trace.end = out.residue;
  return out;
}

ScheduleReport verify_deletion_schedule(const ToleranceSpace& x, const std::vector<std::string>& order) {
  SearchContext ctx;
  return verify_deletion_schedule(x, order, ctx);
}

std::optional<SuspendedCycle> suspended_cycle(const Graph& g) {
  const int n = g.size();
  if (n < 6) return std::nullopt;
  std::vector<int> candidates;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == n - 2) candidates.push_back(v);
  // In an octahedron every vertex qualifies, so try each non-adjacent pair.
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      const int a = candidates[i], b = candidates[j];
      if (g.has_edge(a, b)) continue;
      std::vector<int> keep;
      for (int v = 0; v < n; ++v)
        if (v != a && v != b) keep.push_back(v);
      auto order = cycle_order(g.induced(keep));
      if (order.size() < 4) continue;
      SuspendedCycle out{a, b, {}};
      for (int k : order) out.equator.push_back(keep[k]);
      return out;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Equivalence

namespace {

using LabelMap = std::map<std::string, std::string, LabelLess>;

std::string fresh_vertex(const ToleranceSpace& x, const std::string& base) {
  std::string out = base;
  while (x.contains(out)) out += '\'';
  return out;
}

std::string fresh_numbered(const ToleranceSpace& x, const std::string& prefix, int& counter) {
  std::string out;
  do {
    out = prefix + std::to_string(++counter);
  } while (x.contains(out));
  return out;
}

void append(MoveTrace& t, const Move& m, SearchContext& ctx) {
  t.end = apply_move(t.end, m, ctx);
  t.moves.push_back(m);
}

MoveTrace concat(MoveTrace a, const MoveTrace& b) {
  for (const auto& m : b.moves) a.moves.push_back(m);
  a.end = b.end;
  return a;
}

/// Joins X -> M (fwd) and Y -> M' (back) through an isomorphism M -> M'.
/// Returns the trace X -> Z and the relabelling Z -> Y.
std::pair<MoveTrace, LabelMap> meet(const MoveTrace& fwd, const MoveTrace& back, const LabelMap& iso,
                                    SearchContext& ctx) {
  MoveTrace out = fwd;
  LabelMap to_world;  // label in back's world -> label in out.end
  for (const auto& [m, mp] : iso) to_world[mp] = m;
  auto world = [&](const std::string& l) -> const std::string& {
    auto it = to_world.find(l);
    if (it == to_world.end()) throw Error("internal: label '" + l + "' has no image while composing traces");
    return it->second;
  };
  auto world_all = [&](const std::vector<std::string>& ls) {
    std::vector<std::string> outl;
    for (const auto& l : ls) outl.push_back(world(l));
    return outl;
  };
  const MoveTrace tail = reversed(back);
  for (const auto& m : tail.moves) {
    Move t;
    switch (m.kind) {
      case MoveKind::AttachVertex: {
        const std::string name = fresh_vertex(out.end, m.vertex);
        t = Move::attach_vertex(name, world_all(m.neighbors));
        to_world[m.vertex] = name;
        break;
      }
      case MoveKind::DeleteVertex:
        t = Move::delete_vertex(world(m.vertex), world_all(m.neighbors));
        to_world.erase(m.vertex);
        break;
      case MoveKind::DeleteEdge:
        t = Move::delete_edge(world(m.edge.first), world(m.edge.second));
        break;
      case MoveKind::AttachEdge:
        t = Move::attach_edge(world(m.edge.first), world(m.edge.second));
        break;
    }
    append(out, t, ctx);
  }
  LabelMap relabel;
  for (const auto& [y, w] : to_world) relabel[w] = y;
  return {std::move(out), std::move(relabel)};
}

// One round of the circle stretch: in a cycle ... a b c ..., attach u on
// {b, c}, v on {a, b}, the edge uv, then delete b. The cycle grows by one.
void stretch_cycle(MoveTrace& t, int& counter, SearchContext& ctx) {
  auto order = cycle_order(t.end.graph());
  const std::string a = t.end.label(order[0]);
  const std::string b = t.end.label(order[1]);
  const std::string c = t.end.label(order[2]);
  const std::string u = fresh_numbered(t.end, "c", counter);
  append(t, Move::attach_vertex(u, {b, c}), ctx);
  const std::string v = fresh_numbered(t.end, "c", counter);
  append(t, Move::attach_vertex(v, {a, b}), ctx);
  append(t, Move::attach_edge(u, v), ctx);
  append(t, recorded(t.end, Move::delete_vertex(b)), ctx);
}

// Equator stretch of a suspended cycle: attach x on {c0, c1, N, S}, then
// delete the edge c0c1. The equator grows by one.
void stretch_equator(MoveTrace& t, int& counter, SearchContext& ctx) {
  auto sc = *suspended_cycle(t.end.graph());
  const auto& l = t.end.labels();
  const std::string c0 = l[sc.equator[0]], c1 = l[sc.equator[1]];
  const std::string x = fresh_numbered(t.end, "e", counter);
  append(t, Move::attach_vertex(x, {c0, c1, l[sc.north], l[sc.south]}), ctx);
  append(t, Move::delete_edge(c0, c1), ctx);
}

std::optional<std::string> invariant_difference(const ToleranceSpace& x, const ToleranceSpace& y) {
  if (x.empty() != y.empty()) return std::string("one space is empty and the other is not");
  const auto cx = connected_components(x).size();
  const auto cy = connected_components(y).size();
  if (cx != cy) return "component count differs: " + std::to_string(cx) + " vs " + std::to_string(cy);
  const auto hx = reduced_homology(x);
  const auto hy = reduced_homology(y);
  const std::size_t top = std::max(hx.groups.size(), hy.groups.size());
  for (std::size_t d = 0; d < top; ++d) {
    HomologyGroup gx = d < hx.groups.size() ? hx.groups[d] : HomologyGroup{};
    HomologyGroup gy = d < hy.groups.size() ? hy.groups[d] : HomologyGroup{};
    if (gx.betti != gy.betti) {
      return "betti_" + std::to_string(d) + " differs: " + std::to_string(gx.betti) + " vs " + std::to_string(gy.betti);
    }
    if (gx.torsion != gy.torsion) return "torsion in degree " + std::to_string(d) + " differs";
  }
  return std::nullopt;
}

// Runs a hinted deletion schedule; falls back to the unchanged space when
// the hint is not valid.
MoveTrace apply_hint(const ToleranceSpace& x, const std::vector<std::string>& schedule, SearchContext& ctx) {
  if (schedule.empty()) return {x, {}, x};
  for (const auto& v : schedule)
    if (!x.contains(v)) return {x, {}, x};
  try {
    auto report = verify_deletion_schedule(x, schedule, ctx);
    if (report.ok) return report.trace;
  } catch (const InvalidArgument&) {
  }
  return {x, {}, x};
}

// Neighbour sets tried when attaching a vertex during search: cliques of up
// to three vertices, closed neighbourhoods, contractible links, and unions of
// two adjacent closed neighbourhoods. Each candidate must be contractible.
std::vector<std::vector<int>> attach_families(const Graph& g, SearchContext& ctx) {
  std::set<std::vector<int>> out;
  const int n = g.size();
  for (int a = 0; a < n; ++a) {
    out.insert({a});
    for (int b : g.neighbors(a)) {
      if (b < a) continue;
      out.insert({a, b});
      for (int c : common_neighbors(g, a, b))
        if (c > b) out.insert({a, b, c});
    }
  }
  auto closed = [&](int v) {
    auto s = g.neighbors(v);
    s.insert(std::lower_bound(s.begin(), s.end(), v), v);
    return s;
  };
  std::set<std::vector<int>> guarded;
  for (int v = 0; v < n; ++v) {
    out.insert(closed(v));
    guarded.insert(g.neighbors(v));
    for (int w : g.neighbors(v)) {
      if (w < v) continue;
      auto a = closed(v), b = closed(w);
      std::vector<int> u;
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
      guarded.insert(u);
    }
  }
  for (const auto& s : guarded) {
    if (out.contains(s) || s.empty()) continue;
    if (graph_contractible(g.induced(s), ctx)) out.insert(s);
  }
  return {out.begin(), out.end()};
}

struct SearchNode {
  ToleranceSpace space;
  int parent = -1;
  Move move;
};

class BidirectionalSearch {
 public:
  BidirectionalSearch(const ToleranceSpace& x, const ToleranceSpace& y, const EquivalenceBudget& budget,
                      SearchContext& ctx)
      : ctx_(ctx), budget_(budget), cap_(std::max(x.size(), y.size()) + static_cast<std::size_t>(budget.extra_vertices)) {
    sides_[0].nodes.push_back({x, -1, {}});
    sides_[1].nodes.push_back({y, -1, {}});
    sides_[0].seen.emplace(canonical_form(x.graph()), 0);
    sides_[1].seen.emplace(canonical_form(y.graph()), 0);
    sides_[0].frontier = {0};
    sides_[1].frontier = {0};
  }

  // Meeting pair of node ids (side 0, side 1), or nothing. Throws
  // BudgetExhausted when the node limit is hit.
  std::optional<std::pair<int, int>> run() {
    if (auto hit = sides_[1].seen.find(canonical_form(sides_[0].nodes[0].space.graph())); hit != sides_[1].seen.end()) {
      return std::make_pair(0, hit->second);
    }
    while (!sides_[0].frontier.empty() && !sides_[1].frontier.empty()) {
      const int s = sides_[0].frontier.size() <= sides_[1].frontier.size() ? 0 : 1;
      if (auto met = expand_layer(s)) return met;
    }
    return std::nullopt;
  }

  MoveTrace path(int side, int id) const {
    const auto& nodes = sides_[side].nodes;
    std::vector<Move> moves;
    for (int k = id; nodes[k].parent >= 0; k = nodes[k].parent) moves.push_back(nodes[k].move);
    std::reverse(moves.begin(), moves.end());
    return {nodes[0].space, std::move(moves), nodes[id].space};
  }

 private:
  struct Side {
    std::vector<SearchNode> nodes;
    std::unordered_map<CanonicalForm, int, CanonicalFormHash> seen;
    std::vector<int> frontier;
  };

  std::optional<std::pair<int, int>> expand_layer(int s) {
    Side& me = sides_[s];
    const Side& other = sides_[1 - s];
    std::vector<int> next;
    for (int id : me.frontier) {
      if (++expanded_ > budget_.max_nodes) throw BudgetExhausted("budget exhausted: equivalence search node limit reached");
      const ToleranceSpace here = me.nodes[id].space;
      for (auto& m : successors(here)) {
        ToleranceSpace child = apply_unchecked(here, m);
        auto form = canonical_form(child.graph());
        if (me.seen.contains(form)) continue;
        const int child_id = static_cast<int>(me.nodes.size());
        me.nodes.push_back({std::move(child), id, std::move(m)});
        me.seen.emplace(form, child_id);
        next.push_back(child_id);
        if (auto hit = other.seen.find(form); hit != other.seen.end()) {
          return s == 0 ? std::make_pair(child_id, hit->second) : std::make_pair(hit->second, child_id);
        }
      }
    }
    me.frontier = std::move(next);
    return std::nullopt;
  }

  std::vector<Move> successors(const ToleranceSpace& x) {
    std::vector<Move> out;
    const Graph& g = x.graph();
    const int n = g.size();
    for (int v = 0; v < n; ++v)
      if (n > 1 && graph_simple_vertex(g, v, ctx_)) out.push_back(recorded(x, Move::delete_vertex(x.label(v))));
    for (int u = 0; u < n; ++u)
      for (int w = u + 1; w < n; ++w) {
        if (!graph_simple_edge(g, u, w, ctx_)) continue;
        out.push_back(g.has_edge(u, w) ? Move::delete_edge(x.label(u), x.label(w))
                                       : Move::attach_edge(x.label(u), x.label(w)));
      }
    if (x.size() < cap_) {
      const std::string name = fresh_numbered(x, "t", counter_);
      for (const auto& s : attach_families(g, ctx_)) {
        std::vector<std::string> nbrs;
        for (int k : s) nbrs.push_back(x.label(k));
        out.push_back(Move::attach_vertex(name, std::move(nbrs)));
      }
    }
    return out;
  }

  SearchContext& ctx_;
  EquivalenceBudget budget_;
  std::size_t cap_;
  Side sides_[2];
  std::size_t expanded_ = 0;
  int counter_ = 0;
};

EquivalenceVerdict equivalent_via(const MoveTrace& fwd, const MoveTrace& back, const LabelMap& iso,
                                  const ToleranceSpace& y, std::string method, SearchContext& ctx) {
  auto [trace, relabel_map] = meet(fwd, back, iso, ctx);
  if (!(relabel(trace.end, relabel_map) == y)) throw Error("internal: composed trace does not end at the target");
  EquivalenceVerdict v;
  v.kind = EquivalenceKind::Equivalent;
  v.trace = std::move(trace);
  v.relabel = std::move(relabel_map);
  v.method = std::move(method);
  return v;
}

}  // namespace

EquivalenceVerdict check_equivalent(const ToleranceSpace& x, const ToleranceSpace& y, const EquivalenceBudget& budget,
                                    const EquivalenceHints& hints, SearchContext& ctx) {
  EquivalenceVerdict out;
  if (auto diff = invariant_difference(x, y)) {
    out.kind = EquivalenceKind::NotEquivalent;
    out.reason = *diff;
    out.method = "invariants";
    return out;
  }
  try {
    MoveTrace tx = apply_hint(x, hints.x_schedule, ctx);
    MoveTrace ty = apply_hint(y, hints.y_schedule, ctx);
    tx = concat(tx, reduce_core(tx.end, ctx).trace);
    ty = concat(ty, reduce_core(ty.end, ctx).trace);

    if (auto iso = are_isomorphic(tx.end, ty.end)) return equivalent_via(tx, ty, *iso, y, "cores", ctx);

    // Cycle cores of different lengths, and suspended cycles with different
    // equators, are bridged by explicit stretching rounds.
    const auto ox = cycle_order(tx.end.graph());
    const auto oy = cycle_order(ty.end.graph());
    if (budget.extra_vertices >= 2 && ox.size() >= 4 && oy.size() >= 4) {
      MoveTrace& shorter = ox.size() < oy.size() ? tx : ty;
      const std::size_t target = std::max(ox.size(), oy.size());
      int counter = 0;
      while (shorter.end.size() < target) stretch_cycle(shorter, counter, ctx);
      if (auto iso = are_isomorphic(tx.end, ty.end)) return equivalent_via(tx, ty, *iso, y, "cycle stretch", ctx);
    }
    const auto sx = suspended_cycle(tx.end.graph());
    const auto sy = suspended_cycle(ty.end.graph());
    if (budget.extra_vertices >= 1 && sx && sy) {
      MoveTrace& shorter = sx->equator.size() < sy->equator.size() ? tx : ty;
      const std::size_t target = std::max(tx.end.size(), ty.end.size());
      int counter = 0;
      while (shorter.end.size() < target) stretch_equator(shorter, counter, ctx);
      if (auto iso = are_isomorphic(tx.end, ty.end)) return equivalent_via(tx, ty, *iso, y, "equator stretch", ctx);
    }

    BidirectionalSearch search(tx.end, ty.end, budget, ctx);
    if (auto met = search.run()) {
      MoveTrace fx = concat(tx, search.path(0, met->first));
      MoveTrace fy = concat(ty, search.path(1, met->second));
      auto iso = are_isomorphic(fx.end, fy.end);
      return equivalent_via(fx, fy, *iso, y, "search", ctx);
    }
    out.reason = "search space exhausted within the attachment families without meeting";
  } catch (const BudgetExhausted& e) {
    out.reason = e.what();
  }
  out.kind = EquivalenceKind::Unknown;
  out.method = "search";
  return out;
}

EquivalenceVerdict check_equivalent(const ToleranceSpace& x, const ToleranceSpace& y, const EquivalenceBudget& budget,
                                    const EquivalenceHints& hints) {
  SearchContext ctx;
  return check_equivalent(x, y, budget, hints, ctx);
}

}  // namespace tolspace
