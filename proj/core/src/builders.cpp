#include "tolspace/builders.hpp"

#include "tolspace/error.hpp"

namespace tolspace {

ToleranceSpace cycle(int n, const std::string& prefix) {
  if (n < 3) throw InvalidArgument("cycle: need n >= 3, got " + std::to_string(n));
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    labels.push_back(prefix + std::to_string(i));
    edges.emplace_back(prefix + std::to_string(i), prefix + std::to_string(i % n + 1));
  }
  return ToleranceSpace(std::move(labels), edges);
}

ToleranceSpace complete(int n) {
  if (n < 1) throw InvalidArgument("complete: need n >= 1, got " + std::to_string(n));
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    labels.push_back("v" + std::to_string(i));
    for (int j = i + 1; j <= n; ++j) edges.emplace_back("v" + std::to_string(i), "v" + std::to_string(j));
  }
  return ToleranceSpace(std::move(labels), edges);
}

std::string fresh_label(const ToleranceSpace& x, std::string base) {
  while (x.contains(base)) base += '*';
  return base;
}

namespace {

std::string take_apex(const ToleranceSpace& x, const std::optional<std::string>& wanted, const char* fallback) {
  if (!wanted) return fresh_label(x, fallback);
  if (x.contains(*wanted)) throw InvalidArgument("apex label '" + *wanted + "' clashes with an existing vertex");
  return *wanted;
}

std::vector<std::string> with_label(const ToleranceSpace& x, const std::string& extra) {
  auto labels = x.labels();
  labels.push_back(extra);
  return labels;
}

}  // namespace

ToleranceSpace cone(const ToleranceSpace& x, std::optional<std::string> apex) {
  const std::string a = take_apex(x, apex, "A*");
  auto edges = x.edges();
  for (const auto& v : x.labels()) edges.emplace_back(a, v);
  return ToleranceSpace(with_label(x, a), edges);
}

ToleranceSpace suspension(const ToleranceSpace& x, std::optional<std::string> top, std::optional<std::string> bottom) {
  const std::string a = take_apex(x, top, "A*");
  std::string b;
  if (bottom) {
    b = take_apex(x, bottom, "B*");
    if (b == a) throw InvalidArgument("suspension apexes must differ");
  } else {
    b = fresh_label(x, "B*");
    while (b == a) b += '*';
  }
  auto edges = x.edges();
  for (const auto& v : x.labels()) {
    edges.emplace_back(a, v);
    edges.emplace_back(b, v);
  }
  auto labels = with_label(x, a);
  labels.push_back(b);
  return ToleranceSpace(std::move(labels), edges);
}

ToleranceSpace sphere(int n) {
  if (n < 0) throw InvalidArgument("sphere: dimension must be >= 0");
  ToleranceSpace s({"p", "q"}, {});
  for (int k = 1; k <= n; ++k) {
    // Name the poles of each suspension after its level so the labels stay short.
    s = suspension(s, "n" + std::to_string(k), "s" + std::to_string(k));
  }
  return s;
}

namespace {

void check_join_apexes(const ToleranceSpace& x, const ToleranceSpace& y, const JoinApexes& ap) {
  if (ap.left == ap.right) throw InvalidArgument("join apexes must differ");
  if (x.contains(ap.left)) throw InvalidArgument("left apex '" + ap.left + "' clashes with a vertex of X");
  if (y.contains(ap.right)) throw InvalidArgument("right apex '" + ap.right + "' clashes with a vertex of Y");
}

}  // namespace

ToleranceSpace join(const ToleranceSpace& x, const ToleranceSpace& y, const JoinApexes& ap) {
  check_join_apexes(x, y, ap);
  auto pair = [](const std::string& a, const std::string& b) { return ProductLabel{a, b}.str(); };
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  const auto& xs = x.labels();
  const auto& ys = y.labels();
  const int nx = static_cast<int>(xs.size());
  const int ny = static_cast<int>(ys.size());
  auto close_x = [&](int i, int k) { return i == k || x.graph().has_edge(i, k); };
  auto close_y = [&](int j, int l) { return j == l || y.graph().has_edge(j, l); };

  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) labels.push_back(pair(xs[i], ys[j]));
  for (int i = 0; i < nx; ++i) labels.push_back(pair(xs[i], ap.right));
  for (int j = 0; j < ny; ++j) labels.push_back(pair(ap.left, ys[j]));

  // Middle level: strong product X x Y.
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      for (int k = i; k < nx; ++k)
        for (int l = 0; l < ny; ++l) {
          if ((k == i && l <= j) || !close_x(i, k) || !close_y(j, l)) continue;
          edges.emplace_back(pair(xs[i], ys[j]), pair(xs[k], ys[l]));
        }
  // Top level X x {B}: a copy of X, joined to the middle over x ≈ x'.
  for (int i = 0; i < nx; ++i) {
    for (int k = i + 1; k < nx; ++k)
      if (x.graph().has_edge(i, k)) edges.emplace_back(pair(xs[i], ap.right), pair(xs[k], ap.right));
    for (int k = 0; k < nx; ++k)
      if (close_x(i, k))
        for (int l = 0; l < ny; ++l) edges.emplace_back(pair(xs[i], ap.right), pair(xs[k], ys[l]));
  }
  // Bottom level {A} x Y, symmetric.
  for (int j = 0; j < ny; ++j) {
    for (int l = j + 1; l < ny; ++l)
      if (y.graph().has_edge(j, l)) edges.emplace_back(pair(ap.left, ys[j]), pair(ap.left, ys[l]));
    for (int l = 0; l < ny; ++l)
      if (close_y(j, l))
        for (int k = 0; k < nx; ++k) edges.emplace_back(pair(ap.left, ys[j]), pair(xs[k], ys[l]));
  }
  return ToleranceSpace(std::move(labels), edges);
}

ToleranceSpace join_via_products(const ToleranceSpace& x, const ToleranceSpace& y, const JoinApexes& ap) {
  check_join_apexes(x, y, ap);
  return union_of(product(x, cone(y, ap.right)), product(cone(x, ap.left), y));
}

ToleranceSpace order_sensitive_graph() {
  return ToleranceSpace({"a", "w", "x", "y", "z"},
                        {{"a", "x"}, {"a", "y"}, {"z", "x"}, {"z", "y"}, {"x", "y"}, {"w", "z"}});
}

ToleranceSpace homology_sphere_with_simple_edge() {
  return ToleranceSpace({"1", "2", "3", "4", "5", "6", "7", "8"},
                        {{"1", "3"}, {"1", "4"}, {"1", "5"}, {"1", "2"}, {"2", "5"}, {"2", "3"}, {"2", "7"},
                         {"2", "6"}, {"3", "8"}, {"3", "4"}, {"3", "7"}, {"4", "5"}, {"4", "7"}, {"4", "8"},
                         {"5", "8"}, {"5", "6"}, {"6", "7"}, {"6", "8"}, {"8", "7"}});
}

}  // namespace tolspace
