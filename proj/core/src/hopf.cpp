#include "tolspace/hopf.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "tolspace/builders.hpp"
#include "tolspace/canonical.hpp"
#include "tolspace/error.hpp"

namespace tolspace {

const char* label(S4Element e) {
  switch (e) {
    case S4Element::One:
      return "1";
    case S4Element::I:
      return "i";
    case S4Element::MinusOne:
      return "-1";
    case S4Element::MinusI:
      return "-i";
  }
  return "?";
}

S4Element successor(S4Element e) { return static_cast<S4Element>((static_cast<int>(e) + 1) % 4); }

bool adjacent(S4Element a, S4Element b) {
  const int d = (static_cast<int>(a) - static_cast<int>(b) + 4) % 4;
  return d != 2;
}

namespace {

void check_index(int i, int j) {
  if (i < 1 || i > 8 || j < 1 || j > 8) {
    throw InvalidArgument("mu: indices must lie in 1..8, got (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
}

constexpr S4Element P1 = S4Element::One;
constexpr S4Element PI = S4Element::I;
constexpr S4Element M1 = S4Element::MinusOne;
constexpr S4Element MI = S4Element::MinusI;

// Contour figure, one row per i. Green lines (1) pass through i + j in
// {2, 3, 10, 11, 18}, red (i) through {4, 5, 12, 13}, blue (-1) through
// {6, 7, 14, 15}, purple (-i) through {8, 9, 16, 17}.
constexpr std::array<std::array<S4Element, 8>, 8> kContours = {{
    {P1, P1, PI, PI, M1, M1, MI, MI},  // i = 1
    {P1, PI, PI, M1, M1, MI, MI, P1},  // i = 2
    {PI, PI, M1, M1, MI, MI, P1, P1},  // i = 3
    {PI, M1, M1, MI, MI, P1, P1, PI},  // i = 4
    {M1, M1, MI, MI, P1, P1, PI, PI},  // i = 5
    {M1, MI, MI, P1, P1, PI, PI, M1},  // i = 6
    {MI, MI, P1, P1, PI, PI, M1, M1},  // i = 7
    {MI, P1, P1, PI, PI, M1, M1, MI},  // i = 8
}};

std::string xl(int i) { return "x" + std::to_string(i); }
std::string yl(int j) { return "y" + std::to_string(j); }
std::string ul(int k) { return "u" + std::to_string(k); }
std::string pair(const std::string& a, const std::string& b) { return ProductLabel{a, b}.str(); }

}  // namespace

S4Element mu(int i, int j) {
  check_index(i, j);
  const int s = (i + j - 2) % 8;
  return static_cast<S4Element>(s / 2);
}

S4Element mu_table(int i, int j) {
  check_index(i, j);
  return kContours[i - 1][j - 1];
}

std::vector<std::pair<int, int>> mu_disagreements() {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j)
      if (mu(i, j) != mu_table(i, j)) out.emplace_back(i, j);
  return out;
}

ToleranceSpace circle4() { return ToleranceSpace({"1", "i", "-1", "-i"}, {{"1", "i"}, {"i", "-1"}, {"-1", "-i"}, {"-i", "1"}}); }

ToleranceSpace hopf_base() { return suspension(circle4(), "A", "B"); }

ToleranceSpace hopf_total() { return join(cycle(8, "x"), cycle(8, "y"), {"A", "B"}); }

ToleranceSpace hopf_fiber() { return cycle(8, "u"); }

ToleranceMap hopf_map() {
  if (!mu_disagreements().empty()) throw Error("mu closed form disagrees with the contour table");
  ToleranceMap::Assignment a;
  for (int i = 1; i <= 8; ++i) {
    a[pair(xl(i), "B")] = "A";
    a[pair("A", yl(i))] = "B";
    for (int j = 1; j <= 8; ++j) a[pair(xl(i), yl(j))] = label(mu(i, j));
  }
  return ToleranceMap(hopf_total(), hopf_base(), std::move(a));
}

ToleranceSpace fiber(const ToleranceMap& p, std::string_view b) {
  auto points = p.preimage(b);
  if (points.empty()) throw InvalidArgument("'" + std::string(b) + "' is not in the image of the map");
  return induced(p.domain(), points);
}

ToleranceMap phi_bar() {
  ToleranceMap::Assignment a;
  const std::array<S4Element, 4> images = {P1, PI, M1, MI};
  for (int k = 1; k <= 8; ++k) a[xl(k)] = label(images[(k - 1) / 2]);
  return ToleranceMap(cycle(8, "x"), circle4(), std::move(a));
}

ToleranceSpace equator_fiber_model() {
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  auto inner = [](int k) { return std::to_string((k - 1) % 8 + 1); };
  auto outer = [](int k) { return std::to_string((k - 1) % 8 + 1) + "'"; };
  for (int k = 1; k <= 8; ++k) {
    labels.push_back(inner(k));
    labels.push_back(outer(k));
    edges.emplace_back(inner(k), inner(k + 1));
    edges.emplace_back(outer(k), outer(k + 1));
    edges.emplace_back(inner(k), outer(k));
    edges.emplace_back(inner(k), outer(k + 1));
  }
  return ToleranceSpace(std::move(labels), edges);
}

const char* to_string(Chart c) { return c == Chart::Upper ? "U1" : "U2"; }

Chart parse_chart(std::string_view s) {
  if (s == "upper" || s == "U1" || s == "u1") return Chart::Upper;
  if (s == "lower" || s == "U2" || s == "u2") return Chart::Lower;
  throw InvalidArgument("unknown chart '" + std::string(s) + "' (expected upper/U1 or lower/U2)");
}

std::vector<std::string> chart_points(Chart c) { return {c == Chart::Upper ? "A" : "B", "1", "i", "-1", "-i"}; }

std::vector<std::string> chart_preimage_schedule(Chart c) {
  std::vector<std::string> out;
  for (int a = 1; a <= 8; ++a)
    for (int b = 1; b <= 8; ++b) out.push_back(c == Chart::Upper ? pair(xl(b), yl(a)) : pair(xl(a), yl(b)));
  return out;
}

std::vector<std::string> chart_product_schedule(Chart) {
  std::vector<std::string> out;
  for (const char* e : {"1", "i", "-1", "-i"})
    for (int b = 1; b <= 8; ++b) out.push_back(pair(e, ul(b)));
  return out;
}

namespace {

// π1 on the labels of V x F.
std::map<std::string, std::string, LabelLess> first_projection(const ToleranceSpace& v, const ToleranceSpace& f) {
  std::map<std::string, std::string, LabelLess> out;
  for (const auto& a : v.labels())
    for (const auto& b : f.labels()) out[pair(a, b)] = a;
  return out;
}

}  // namespace

Trivialization trivialization(Chart c) {
  Trivialization t;
  t.chart = c;
  const ToleranceMap h = hopf_map();
  const ToleranceSpace f = hopf_fiber();
  t.chart_space = induced(h.codomain(), chart_points(c));
  std::vector<std::string> pre;
  for (const auto& b : chart_points(c))
    for (const auto& e : h.preimage(b)) pre.push_back(e);
  t.preimage = induced(h.domain(), pre);
  t.cone_product = product(cone(cycle(8, "v"), "B"), cycle(8, "u"));
  t.preimage_is_cone_product = are_isomorphic(t.preimage, t.cone_product).has_value();
  t.product = product(t.chart_space, f);

  const std::string pole = c == Chart::Upper ? "A" : "B";
  ToleranceMap::Assignment a;
  for (int k = 1; k <= 8; ++k) {
    if (c == Chart::Upper) {
      a[pair(xl(k), "B")] = pair(pole, ul(k));
    } else {
      a[pair("A", yl(k))] = pair(pole, ul(k));
    }
    for (int j = 1; j <= 8; ++j) {
      const int fibre_index = c == Chart::Upper ? k : j;
      a[pair(xl(k), yl(j))] = pair(label(mu(k, j)), ul(fibre_index));
    }
  }
  t.phi.emplace(t.preimage, t.product, std::move(a));
  t.phi_continuous = is_continuous(*t.phi);
  const auto pi1 = first_projection(t.chart_space, f);
  t.commutes = true;
  for (const auto& e : t.preimage.labels()) {
    ++t.points_checked;
    if (pi1.at((*t.phi)(e)) != h(e)) t.commutes = false;
  }
  return t;
}

BundleReport verify_fiber_bundle(const ToleranceMap& p, const ToleranceSpace& f, const std::vector<ChartSpec>& charts,
                                 const EquivalenceBudget& budget, SearchContext& ctx) {
  if (!p.is_surjective()) throw InvalidArgument("the bundle projection is not surjective");
  BundleReport out;
  out.continuous = is_continuous(p);
  if (!out.continuous) out.failures.push_back("projection is not continuous");

  for (const auto& b : p.codomain().labels()) {
    FiberCheck fc;
    fc.base = b;
    const ToleranceSpace fib = fiber(p, b);
    fc.size = fib.size();
    fc.verdict = check_equivalent(fib, f, budget, {}, ctx);
    if (fc.verdict.kind != EquivalenceKind::Equivalent) {
      out.failures.push_back("fibre over " + b + " is " + (fc.verdict.kind == EquivalenceKind::Unknown ? "not shown" : "not") +
                             " simple digitally equivalent to F: " + fc.verdict.reason);
    }
    const bool covered = std::any_of(charts.begin(), charts.end(), [&](const ChartSpec& c) {
      return std::find(c.base_points.begin(), c.base_points.end(), b) != c.base_points.end();
    });
    if (!covered) out.failures.push_back("base point " + b + " lies in no chart");
    out.fibers.push_back(std::move(fc));
  }

  for (const auto& spec : charts) {
    ChartCheck cc;
    cc.name = spec.name;
    cc.base_points = spec.base_points;
    const ToleranceSpace v = induced(p.codomain(), spec.base_points);
    std::vector<std::string> pre;
    for (const auto& b : v.labels())
      for (const auto& e : p.preimage(b)) pre.push_back(e);
    const ToleranceSpace preimage = induced(p.domain(), pre);
    const ToleranceSpace prod = product(v, f);
    cc.preimage_size = preimage.size();
    cc.product_size = prod.size();
    cc.equivalence = check_equivalent(preimage, prod, budget, spec.hints, ctx);
    if (cc.equivalence.kind != EquivalenceKind::Equivalent) {
      out.failures.push_back("chart " + spec.name + ": preimage not shown equivalent to V x F: " + cc.equivalence.reason);
    }

    std::optional<ToleranceMap> phi = spec.phi;
    cc.phi_supplied = phi.has_value();
    if (!phi) {
      ToleranceMap::Assignment a;
      for (const auto& e : preimage.labels()) a[e] = pair(p(e), f.label(0));
      phi.emplace(preimage, prod, std::move(a));
    }
    if (!(phi->domain() == preimage) || !(phi->codomain() == prod)) {
      out.failures.push_back("chart " + spec.name + ": φ must map the chart preimage to V x F");
      out.charts.push_back(std::move(cc));
      continue;
    }
    cc.phi_continuous = is_continuous(*phi);
    if (!cc.phi_continuous) out.failures.push_back("chart " + spec.name + ": φ is not continuous");
    const auto pi1 = first_projection(v, f);
    cc.commutes = true;
    for (const auto& e : preimage.labels()) {
      ++cc.points_checked;
      if (pi1.at((*phi)(e)) != p(e)) {
        cc.commutes = false;
        if (!cc.commutation_witness) cc.commutation_witness = e;
      }
    }
    if (!cc.commutes) out.failures.push_back("chart " + spec.name + ": π1 ∘ φ differs from p at " + *cc.commutation_witness);
    out.charts.push_back(std::move(cc));
  }
  out.pass = out.failures.empty();
  return out;
}

BundleReport verify_fiber_bundle(const ToleranceMap& p, const ToleranceSpace& f, const std::vector<ChartSpec>& charts,
                                 const EquivalenceBudget& budget) {
  SearchContext ctx;
  return verify_fiber_bundle(p, f, charts, budget, ctx);
}

std::vector<ChartSpec> hopf_charts() {
  std::vector<ChartSpec> out;
  for (Chart c : {Chart::Upper, Chart::Lower}) {
    ChartSpec spec;
    spec.name = to_string(c);
    spec.base_points = chart_points(c);
    spec.phi = trivialization(c).phi;
    spec.hints = {chart_preimage_schedule(c), chart_product_schedule(c)};
    out.push_back(std::move(spec));
  }
  return out;
}

BundleReport verify_hopf_bundle(SearchContext& ctx) {
  return verify_fiber_bundle(hopf_map(), hopf_fiber(), hopf_charts(), {}, ctx);
}

BundleReport verify_hopf_bundle() {
  SearchContext ctx;
  return verify_hopf_bundle(ctx);
}

std::optional<MultiplicationTable> search_unital_multiplication(const ToleranceSpace& s, std::string_view unit,
                                                                std::size_t* nodes) {
  const int n = static_cast<int>(s.size());
  if (n > 8) throw InvalidArgument("search_unital_multiplication: at most 8 points are supported");
  const int e = s.index_of(unit);
  const Graph& g = s.graph();
  auto close = [&](int a, int b) { return a == b || g.has_edge(a, b); };

  std::vector<int> value(static_cast<std::size_t>(n) * n, -1);
  auto at = [&](int a, int b) -> int& { return value[static_cast<std::size_t>(a) * n + b]; };
  for (int x = 0; x < n; ++x) {
    at(x, e) = x;
    at(e, x) = x;
  }
  std::vector<std::pair<int, int>> cells;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != e && b != e) cells.emplace_back(a, b);

  // Closed neighbourhoods, for the product-space neighbours of a cell.
  std::vector<std::vector<int>> closed(n);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (close(v, w)) closed[v].push_back(w);

  std::size_t count = 0;
  auto consistent = [&](int a, int b, int val) {
    for (int a2 : closed[a])
      for (int b2 : closed[b]) {
        const int other = at(a2, b2);
        if (other >= 0 && !close(val, other)) return false;
      }
    return true;
  };
  // Unit row and column alone can already break continuity.
  for (int x = 0; x < n; ++x)
    if (!consistent(x, e, x) || !consistent(e, x, x)) {
      if (nodes) *nodes = count;
      return std::nullopt;
    }

  std::function<bool(std::size_t)> fill = [&](std::size_t k) {
    if (k == cells.size()) return true;
    const auto [a, b] = cells[k];
    for (int val = 0; val < n; ++val) {
      ++count;
      if (!consistent(a, b, val)) continue;
      at(a, b) = val;
      if (fill(k + 1)) return true;
      at(a, b) = -1;
    }
    return false;
  };
  const bool found = fill(0);
  if (nodes) *nodes = count;
  if (!found) return std::nullopt;
  MultiplicationTable::Table table;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[s.label(a)][s.label(b)] = s.label(at(a, b));
  return MultiplicationTable(s, std::string(unit), std::move(table));
}

}  // namespace tolspace
