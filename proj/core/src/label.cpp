#include "tolspace/label.hpp"

#include <cctype>

namespace tolspace {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Compares two digit runs numerically without converting (runs may be long).
int compare_digit_runs(std::string_view a, std::string_view b) {
  std::size_t za = 0, zb = 0;
  while (za + 1 < a.size() && a[za] == '0') ++za;
  while (zb + 1 < b.size() && b[zb] == '0') ++zb;
  a.remove_prefix(za);
  b.remove_prefix(zb);
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  int c = a.compare(b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

}  // namespace

bool label_less(std::string_view a, std::string_view b) noexcept {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && is_digit(a[ie])) ++ie;
      while (je < b.size() && is_digit(b[je])) ++je;
      int c = compare_digit_runs(a.substr(i, ie - i), b.substr(j, je - j));
      if (c != 0) return c < 0;
      i = ie;
      j = je;
      continue;
    }
    if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]);
    ++i;
    ++j;
  }
  if ((i < a.size()) != (j < b.size())) return i >= a.size();
  // Equal under the natural order ("x01" vs "x1"): fall back to raw bytes.
  return a < b;
}

}  // namespace tolspace
