#pragma once

#include <optional>
#include <string>

#include "tolspace/space.hpp"

namespace tolspace {

/// Cycle on prefix1..prefixn (n >= 3); cycle(4) is the diamond.
ToleranceSpace cycle(int n, const std::string& prefix = "x");

/// Complete graph on v1..vn (n >= 1).
ToleranceSpace complete(int n);

/// Fresh apex label: `base` with '*' appended until it is not a label of x.
std::string fresh_label(const ToleranceSpace& x, std::string base);

/// Adjoins an apex adjacent to every vertex. Without an explicit name the
/// apex is the first fresh label built from "A*"; an explicit name that is
/// already taken is an error.
ToleranceSpace cone(const ToleranceSpace& x, std::optional<std::string> apex = std::nullopt);

/// Two non-adjacent apexes, each adjacent to all of x (defaults "A*", "B*").
ToleranceSpace suspension(const ToleranceSpace& x, std::optional<std::string> top = std::nullopt,
                          std::optional<std::string> bottom = std::nullopt);

/// S^0 = {p, q} for n = 0, else suspension(sphere(n - 1)). 2n + 2 vertices.
ToleranceSpace sphere(int n);

struct JoinApexes {
  std::string left = "A*";   ///< apex of the cone on X, paired with Y
  std::string right = "B*";  ///< apex of the cone on Y, paired with X
};

/// X * Y on three levels: X x {B} on top, X x Y in the middle, {A} x Y at
/// the bottom. (x,B) ~ (x',y) iff x ≈ x'; (A,y) ~ (x,y') iff y ≈ y'; the two
/// apex levels never touch. Labels are "(x,y)", "(A*,y)" and "(x,B*)".
ToleranceSpace join(const ToleranceSpace& x, const ToleranceSpace& y, const JoinApexes& apexes = {});

/// Same space built as the union of the strong products X x CY and CX x Y.
ToleranceSpace join_via_products(const ToleranceSpace& x, const ToleranceSpace& y, const JoinApexes& apexes = {});

/// Five-vertex graph a, x, y, z, w where w hangs off z: w is simple, z is
/// not, and z becomes simple once w is gone.
ToleranceSpace order_sensitive_graph();

/// Eight-vertex homology 2-sphere on 1..8 with the distinguished simple edge
/// {4,7}. Deleting that edge leaves a digital 2-sphere.
ToleranceSpace homology_sphere_with_simple_edge();
inline constexpr const char* kSimpleEdgeU = "4";
inline constexpr const char* kSimpleEdgeV = "7";

}  // namespace tolspace
