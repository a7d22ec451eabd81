#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclic_permutation.hpp"
#include "errors.hpp"

// The reference catalog of second-minimal period-7 patterns (nine classes up
// to inverse), monotonicity signatures, and the spiral patterns that realize
// minimal odd periods.

namespace intervaldyn {

// The nine second-minimal period-7 classes, one representative each.
inline const std::vector<CyclicPermutation>& second_minimal_7_catalog() {
  static const std::vector<CyclicPermutation> catalog = {
      CyclicPermutation({4, 5, 7, 6, 3, 2, 1}),  // 1
      CyclicPermutation({3, 7, 5, 6, 4, 2, 1}),  // 2
      CyclicPermutation({6, 4, 7, 5, 3, 2, 1}),  // 3
      CyclicPermutation({7, 4, 6, 5, 3, 1, 2}),  // 4
      CyclicPermutation({4, 6, 7, 5, 2, 3, 1}),  // 5
      CyclicPermutation({4, 6, 7, 5, 3, 1, 2}),  // 6
      CyclicPermutation({4, 7, 6, 5, 2, 1, 3}),  // 7
      CyclicPermutation({3, 7, 6, 5, 2, 4, 1}),  // 8
      CyclicPermutation({4, 7, 5, 6, 2, 3, 1}),  // 9
  };
  return catalog;
}

// Monotonicity signature: collapse the sign runs of consecutive image
// differences and name each interior turning point ("max", "min-max",
// "max-min-max", ...).  Monotone patterns (n <= 2) give the empty string.
inline std::string shape_signature(const CyclicPermutation& p) {
  const auto& img = p.image();
  std::string out;
  int prev_sign = 0;
  for (size_t i = 1; i < img.size(); ++i) {
    const int sign = img[i] > img[i - 1] ? 1 : -1;
    if (prev_sign != 0 && sign != prev_sign) {
      if (!out.empty()) out += '-';
      out += prev_sign > 0 ? "max" : "min";
    }
    prev_sign = sign;
  }
  return out;
}

// Index (1..9) of a period-7 pattern in the second-minimal catalog, matching
// up to inverse; empty for anything else.
inline std::optional<int> match_catalog(const CyclicPermutation& p) {
  if (p.size() != 7) return std::nullopt;
  const CyclicPermutation canon = canonical_representative(p);
  const auto& catalog = second_minimal_7_catalog();
  for (size_t i = 0; i < catalog.size(); ++i)
    if (canonical_representative(catalog[i]) == canon)
      return static_cast<int>(i) + 1;
  return std::nullopt;
}

// The spiral pattern of odd period n: the unique minimal odd pattern up to
// inverse.  Orbit points alternate around the center, e.g. (3 5 4 2 1) for
// n = 5 and (4 7 6 5 3 2 1) for n = 7.
inline CyclicPermutation spiral_pattern(int n) {
  if (n < 3 || n % 2 == 0)
    throw domain_error("spiral_pattern: period must be odd and >= 3");
  const int k = (n - 1) / 2;
  std::vector<int> img(static_cast<size_t>(n));
  img[0] = k + 1;
  for (int i = 2; i <= k + 1; ++i) img[static_cast<size_t>(i - 1)] = n + 2 - i;
  for (int i = k + 2; i <= n; ++i) img[static_cast<size_t>(i - 1)] = n + 1 - i;
  return CyclicPermutation(img);
}

}  // namespace intervaldyn
