#pragma once

#include <string>
#include <string_view>

namespace tolspace {

/// Natural order on labels: maximal digit runs compare numerically, everything
/// else bytewise, ties broken by the raw string. "x2" < "x10".
bool label_less(std::string_view a, std::string_view b) noexcept;

struct LabelLess {
  using is_transparent = void;
  bool operator()(std::string_view a, std::string_view b) const noexcept {
    return label_less(a, b);
  }
};

}  // namespace tolspace
