#pragma once

#include <cstdint>
#include <optional>

#include "errors.hpp"

// The total order on positive integers in which the period set of any
// continuous self-map of an interval is always a lower set:
//
//   1 < 2 < 4 < 8 < ... < 2^k * 9 < 2^k * 7 < 2^k * 5 < 2^k * 3 < ...
//     ... < 2*9 < 2*7 < 2*5 < 2*3 < ... < 9 < 7 < 5 < 3
//
// Pure powers of two ascend by exponent and precede everything else;
// the remaining numbers are grouped by their power-of-two factor, higher
// factors first, and descend by odd part within a group. 3 is maximal.

namespace intervaldyn {

// n = 2^exponent * odd_part with odd_part odd.
struct PeriodDecomposition {
  std::uint64_t exponent;
  std::uint64_t odd_part;

  friend bool operator==(const PeriodDecomposition&,
                         const PeriodDecomposition&) = default;
};

inline PeriodDecomposition decompose(std::uint64_t n) {
  if (n == 0) throw domain_error("decompose: period must be positive");
  std::uint64_t e = 0;
  while ((n & 1u) == 0) {
    n >>= 1;
    ++e;
  }
  return {e, n};
}

// Strict order: true iff a precedes b (a is forced by b whenever a != b).
inline bool sharkovskii_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  const PeriodDecomposition da = decompose(a), db = decompose(b);
  const bool a_pow = da.odd_part == 1, b_pow = db.odd_part == 1;
  if (a_pow && b_pow) return da.exponent < db.exponent;
  if (a_pow != b_pow) return a_pow;  // powers of two precede all others
  if (da.exponent != db.exponent) return da.exponent > db.exponent;
  return da.odd_part > db.odd_part;
}

// Walking from the maximum 3 toward the minimum 1, the element visited
// immediately after n; empty for n = 1.
inline std::optional<std::uint64_t> descending_successor(std::uint64_t n) {
  const PeriodDecomposition d = decompose(n);
  if (d.odd_part == 1) {
    if (d.exponent == 0) return std::nullopt;  // 1 is last
    return std::uint64_t{1} << (d.exponent - 1);
  }
  return (d.odd_part + 2) << d.exponent;
}

// The element visited immediately before n on the same walk; empty when no
// immediate predecessor exists (n = 3, and n = 3 * 2^k which sit just after
// a limit of the preceding group).
inline std::optional<std::uint64_t> descending_predecessor(std::uint64_t n) {
  const PeriodDecomposition d = decompose(n);
  if (d.odd_part == 1) return std::uint64_t{1} << (d.exponent + 1);
  if (d.odd_part == 3) return std::nullopt;
  return (d.odd_part - 2) << d.exponent;
}

}  // namespace intervaldyn
