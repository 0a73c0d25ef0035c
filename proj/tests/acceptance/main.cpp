// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <iostream>

#include "acceptance.hpp"

int main() {
  const auto outcomes = tolspace::acceptance::run_all([](const std::string& s) { std::cerr << s << '\n'; });
  std::cout << tolspace::acceptance::format_table(outcomes);
  for (const auto& o : outcomes)
    if (!o.pass) return 1;
  return 0;
}
