#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tolspace/homology.hpp"
#include "tolspace/moves.hpp"

namespace tolspace {

/// What was established about one vertex link.
struct LinkEvidence {
  std::string vertex;
  std::size_t link_size = 0;
  Verdict verdict = Verdict::Unknown;
  /// "digital sphere", "core is a digital sphere", "core is a suspended
  /// cycle", "core equivalent to sphere", or the failure.
  std::string method;
  /// Reduction of the link to its core (homology-sphere check only).
  std::optional<MoveTrace> reduction;
  /// Core -> standard sphere, when that route was needed.
  std::optional<MoveTrace> equivalence;
  std::string detail;
};

struct SphereReport {
  Verdict verdict = Verdict::Unknown;
  int dimension = 0;
  std::optional<HomologyProfile> homology;
  /// One entry per vertex in label order (empty for dimension 0).
  std::vector<LinkEvidence> links;
  /// Clauses that failed or could not be decided, in check order.
  std::vector<std::string> failures;
};

struct SphereOptions {
  EquivalenceBudget budget;
};

/// Dimension 0: exactly two non-adjacent points. Dimension n > 0: connected,
/// every link a digital (n-1)-sphere, and X - v simple digitally
/// contractible for every v. Recursive link checks are memoized on
/// (canonical form, dimension).
SphereReport is_digital_sphere(const ToleranceSpace& x, int n, SearchContext& ctx);
SphereReport is_digital_sphere(const ToleranceSpace& x, int n);

/// Dimension 0: exactly two components, each simple digitally contractible.
/// Dimension n > 0: connected, reduced homology Z in degree n only, and every
/// link simple digitally equivalent to a digital (n-1)-sphere. Links are
/// reduced to cores first; a core is accepted when it is itself a digital
/// sphere, a suspended cycle (n = 3), or checked equivalent to sphere(n-1).
SphereReport is_digital_homology_sphere(const ToleranceSpace& x, int n, const SphereOptions& options,
                                        SearchContext& ctx);
SphereReport is_digital_homology_sphere(const ToleranceSpace& x, int n, const SphereOptions& options = {});

}  // namespace tolspace
