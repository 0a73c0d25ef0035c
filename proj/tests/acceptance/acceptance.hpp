#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace tolspace::acceptance {

struct Outcome {
  int id = 0;
  std::string title;
  bool pass = false;
  /// What was measured, or the first thing that failed.
  std::string detail;
  double seconds = 0.0;
};

/// Receives one-line progress notes while a criterion runs.
using Progress = std::function<void(const std::string&)>;

Outcome hopf_homology(const Progress& progress = {});
Outcome fiber_bundle(const Progress& progress = {});
Outcome mu_fidelity(const Progress& progress = {});
Outcome homology_three_sphere(const Progress& progress = {});
Outcome sphere_with_simple_edge(const Progress& progress = {});
Outcome equivalence_of_circles(const Progress& progress = {});
Outcome no_circle_multiplication(const Progress& progress = {});
Outcome group_completeness(const Progress& progress = {});
Outcome property_suites(const Progress& progress = {});

/// All criteria in order 1..9.
std::vector<Outcome> run_all(const Progress& progress = {});

/// One "PASS"/"FAIL" row per criterion, then "ALL CHECKS PASSED" or
/// "<k> OF <n> CHECKS FAILED".
std::string format_table(const std::vector<Outcome>& outcomes);

/// Public library operations the criteria call directly, recorded as they run.
const std::set<std::string>& exercised();
/// Every public operation of the library, by name.
const std::vector<std::string>& public_operations();

}  // namespace tolspace::acceptance
