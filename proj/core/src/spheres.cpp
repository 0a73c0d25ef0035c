#include "tolspace/spheres.hpp"

#include "tolspace/builders.hpp"
#include "tolspace/error.hpp"

namespace tolspace {

namespace {

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::No || b == Verdict::No) return Verdict::No;
  if (a == Verdict::Unknown || b == Verdict::Unknown) return Verdict::Unknown;
  return Verdict::Yes;
}

Verdict contractible_verdict(const Graph& g, SearchContext& ctx) {
  try {
    return graph_contractible(g, ctx) ? Verdict::Yes : Verdict::No;
  } catch (const BudgetExhausted&) {
    return Verdict::Unknown;
  }
}

bool two_points(const Graph& g) { return g.size() == 2 && !g.has_edge(0, 1); }

Verdict sphere_verdict(const Graph& g, int n, SearchContext& ctx) {
  if (n == 0) return two_points(g) ? Verdict::Yes : Verdict::No;
  if (!is_connected(g)) return Verdict::No;
  std::optional<SphereKey> key;
  if (g.size() <= ctx.limits().memo_max_vertices) {
    key = SphereKey{canonical_form(g), n};
    if (auto hit = ctx.sphere_memo().get(*key)) return *hit;
  }
  Verdict out = Verdict::Yes;
  for (int v = 0; v < g.size() && out != Verdict::No; ++v) out = combine(out, sphere_verdict(g.link(v), n - 1, ctx));
  for (int v = 0; v < g.size() && out != Verdict::No; ++v)
    out = combine(out, contractible_verdict(g.without_vertex(v), ctx));
  if (key && out != Verdict::Unknown) ctx.sphere_memo().put(*key, out);
  return out;
}

void check_dimension(int n) {
  if (n < 0) throw InvalidArgument("sphere dimension must be >= 0");
}

}  // namespace

SphereReport is_digital_sphere(const ToleranceSpace& x, int n, SearchContext& ctx) {
  check_dimension(n);
  SphereReport out;
  out.dimension = n;
  if (n == 0) {
    out.verdict = two_points(x.graph()) ? Verdict::Yes : Verdict::No;
    if (out.verdict == Verdict::No) out.failures.push_back("not exactly two non-adjacent points");
    return out;
  }
  out.verdict = Verdict::Yes;
  if (!is_connected(x)) {
    out.verdict = Verdict::No;
    out.failures.push_back("not connected");
    return out;
  }
  const Graph& g = x.graph();
  for (int v = 0; v < g.size(); ++v) {
    LinkEvidence e;
    e.vertex = x.label(v);
    const Graph l = g.link(v);
    e.link_size = static_cast<std::size_t>(l.size());
    e.verdict = sphere_verdict(l, n - 1, ctx);
    e.method = e.verdict == Verdict::Yes ? "digital sphere" : "link is not a digital sphere";
    if (e.verdict == Verdict::Unknown) e.method = "undecided";
    if (e.verdict != Verdict::Yes) {
      out.failures.push_back("link of " + e.vertex + " is not a digital " + std::to_string(n - 1) + "-sphere" +
                             (e.verdict == Verdict::Unknown ? " (undecided)" : ""));
    }
    out.verdict = combine(out.verdict, e.verdict);
    out.links.push_back(std::move(e));
  }
  for (int v = 0; v < g.size(); ++v) {
    const Verdict c = contractible_verdict(g.without_vertex(v), ctx);
    if (c != Verdict::Yes) {
      out.failures.push_back("X - " + x.label(v) + " is not simple digitally contractible" +
                             (c == Verdict::Unknown ? " (undecided)" : ""));
    }
    out.verdict = combine(out.verdict, c);
  }
  return out;
}

SphereReport is_digital_sphere(const ToleranceSpace& x, int n) {
  SearchContext ctx;
  return is_digital_sphere(x, n, ctx);
}

SphereReport is_digital_homology_sphere(const ToleranceSpace& x, int n, const SphereOptions& options,
                                        SearchContext& ctx) {
  check_dimension(n);
  SphereReport out;
  out.dimension = n;
  out.verdict = Verdict::Yes;
  if (n == 0) {
    const auto parts = connected_components(x);
    if (parts.size() != 2) {
      out.verdict = Verdict::No;
      out.failures.push_back("expected two components, found " + std::to_string(parts.size()));
      return out;
    }
    for (const auto& part : parts) {
      const Verdict c = contractible_verdict(induced(x, part).graph(), ctx);
      if (c != Verdict::Yes) out.failures.push_back("component of " + part.front() + " is not simple digitally contractible");
      out.verdict = combine(out.verdict, c);
    }
    return out;
  }
  if (!is_connected(x)) {
    out.verdict = Verdict::No;
    out.failures.push_back("not connected");
    return out;
  }
  out.homology = reduced_homology(x);
  if (!out.homology->is_sphere(n)) {
    out.verdict = Verdict::No;
    out.failures.push_back("reduced homology " + out.homology->str() + " is not that of an " + std::to_string(n) + "-sphere");
  }
  const ToleranceSpace model = sphere(n - 1);
  for (const auto& v : x.labels()) {
    LinkEvidence e;
    e.vertex = v;
    const ToleranceSpace l = link(x, v);
    e.link_size = l.size();
    try {
      auto reduction = reduce_core(l, ctx);
      const ToleranceSpace& core = reduction.core;
      e.reduction = std::move(reduction.trace);
      if (sphere_verdict(core.graph(), n - 1, ctx) == Verdict::Yes) {
        e.verdict = Verdict::Yes;
        e.method = "core is a digital sphere";
      } else if (n - 1 == 2 && suspended_cycle(core.graph())) {
        e.verdict = Verdict::Yes;
        e.method = "core is a suspended cycle";
      } else {
        auto eq = check_equivalent(core, model, options.budget, {}, ctx);
        switch (eq.kind) {
          case EquivalenceKind::Equivalent:
            e.verdict = Verdict::Yes;
            e.method = "core equivalent to sphere";
            e.equivalence = std::move(eq.trace);
            break;
          case EquivalenceKind::NotEquivalent:
            e.verdict = Verdict::No;
            e.method = "not equivalent to a sphere";
            e.detail = eq.reason;
            break;
          case EquivalenceKind::Unknown:
            e.verdict = Verdict::Unknown;
            e.method = "undecided";
            e.detail = eq.reason;
            break;
        }
      }
    } catch (const BudgetExhausted& err) {
      e.verdict = Verdict::Unknown;
      e.method = "undecided";
      e.detail = err.what();
    }
    if (e.verdict != Verdict::Yes) {
      out.failures.push_back("link of " + v + ": " + e.method + (e.detail.empty() ? "" : " (" + e.detail + ")"));
    }
    out.verdict = combine(out.verdict, e.verdict);
    out.links.push_back(std::move(e));
  }
  return out;
}

SphereReport is_digital_homology_sphere(const ToleranceSpace& x, int n, const SphereOptions& options) {
  SearchContext ctx;
  return is_digital_homology_sphere(x, n, options, ctx);
}

}  // namespace tolspace
