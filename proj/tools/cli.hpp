#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tolspace/space.hpp"

namespace tolspace::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Runs one command line. `args` excludes the program name. JSON goes to
/// `out` (or the --out file), diagnostics and progress to `err`; `in` is read
/// when an input path is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// The `build` grammar: cycle:n | complete:n | sphere:n | cone X |
/// suspension X | join X Y | product X Y | @file.json | a named space.
ToleranceSpace build_space(const std::vector<std::string>& tokens);

/// Names accepted by build_space as whole spaces.
std::vector<std::string> named_spaces();

}  // namespace tolspace::cli
