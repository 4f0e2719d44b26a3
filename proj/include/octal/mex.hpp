#pragma once

#include <span>
#include <vector>

#include "octal/rules.hpp"

namespace octal {

// Least nonnegative integer absent from `values` (duplicates allowed).
inline GrundyValue mex(std::span<const GrundyValue> values) {
  // The answer is at most values.size(), so larger entries can be ignored.
  std::vector<char> present(values.size() + 1, 0);
  for (GrundyValue v : values) {
    if (v < present.size()) present[v] = 1;
  }
  GrundyValue m = 0;
  while (present[m]) ++m;
  return m;
}

}  // namespace octal
