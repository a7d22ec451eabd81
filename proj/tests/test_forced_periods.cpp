#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "intervaldyn/cyclic_permutation.hpp"
#include "intervaldyn/forced_periods.hpp"
#include "intervaldyn/sharkovskii.hpp"
#include "support/lmap_oracle.hpp"

using intervaldyn::CyclicPermutation;
using intervaldyn::has_least_period;
using intervaldyn::is_minimal;
using intervaldyn::is_second_minimal;
using intervaldyn::sharkovskii_less;

namespace {

// All cyclic permutations of {1..n}, generated by brute force.
std::vector<CyclicPermutation> all_cyclic(int n) {
  std::vector<int> image(static_cast<size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  std::vector<CyclicPermutation> out;
  do {
    try {
      out.emplace_back(image);
    } catch (const intervaldyn::domain_error&) {
    }
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

const CyclicPermutation& stefan5() {
  static const CyclicPermutation p({3, 5, 4, 2, 1});
  return p;
}

}  // namespace

TEST_CASE("five-point extremal orbit forces everything except period three",
          "[forcing]") {
  for (std::uint64_t m : {1, 2, 4, 5, 6, 7, 8, 9, 10, 12}) {
    CAPTURE(m);
    CHECK(has_least_period(stefan5(), m));
  }
  CHECK_FALSE(has_least_period(stefan5(), 3));
  CHECK(is_minimal(stefan5()));
}

TEST_CASE("seven-point next-to-extremal orbit forces down to period five",
          "[forcing]") {
  const CyclicPermutation p({4, 5, 7, 6, 3, 2, 1});
  CHECK(has_least_period(p, 5));
  CHECK(has_least_period(p, 7));
  CHECK(has_least_period(p, 9));
  CHECK(has_least_period(p, 6));
  CHECK_FALSE(has_least_period(p, 3));
  CHECK(is_second_minimal(p));
  CHECK_FALSE(is_minimal(p));
}

TEST_CASE("seven-point extremal orbit forces nothing stronger than itself",
          "[forcing]") {
  const CyclicPermutation p({4, 7, 6, 5, 3, 2, 1});
  CHECK(is_minimal(p));
  CHECK(has_least_period(p, 7));
  CHECK(has_least_period(p, 9));
  CHECK(has_least_period(p, 6));
  CHECK_FALSE(has_least_period(p, 5));
  CHECK_FALSE(has_least_period(p, 3));
}

TEST_CASE("doubled two-cycle forces only binary periods below it",
          "[forcing]") {
  const CyclicPermutation p({3, 4, 2, 1});  // 1 -> 3 -> 2 -> 4 -> 1
  for (std::uint64_t m : {1, 2, 4}) {
    CAPTURE(m);
    CHECK(has_least_period(p, m));
  }
  for (std::uint64_t m : {3, 5, 6, 7, 8, 9}) {
    CAPTURE(m);
    CHECK_FALSE(has_least_period(p, m));
  }
  CHECK(is_minimal(p));
}

TEST_CASE("walk counting stays exact across integer-width boundaries",
          "[forcing]") {
  // Counts of closed walks grow geometrically, so moderate periods already
  // overflow 64-bit and 128-bit accumulators; answers must not change.
  CHECK(has_least_period(stefan5(), 60));
  CHECK(has_least_period(stefan5(), 63));
  CHECK(has_least_period(stefan5(), 64));
  CHECK(has_least_period(stefan5(), 128));

  const CyclicPermutation doubled({3, 4, 2, 1});
  CHECK_FALSE(has_least_period(doubled, 64));
  CHECK_FALSE(has_least_period(doubled, 96));
  CHECK_FALSE(has_least_period(doubled, 128));
}

TEST_CASE("period query rejects zero", "[forcing]") {
  CHECK_THROWS_AS(has_least_period(stefan5(), 0), intervaldyn::domain_error);
}

TEST_CASE("second-minimality is undefined off its period range", "[forcing]") {
  CHECK_THROWS_AS(is_second_minimal(stefan5()), intervaldyn::domain_error);
  CHECK_THROWS_AS(is_second_minimal(CyclicPermutation({2, 3, 1})),
                  intervaldyn::domain_error);
}

TEST_CASE("forcing is invariant under pattern reversal", "[forcing]") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : all_cyclic(n)) {
      const auto q = p.inverse();
      for (std::uint64_t m = 1; m <= 9; ++m) {
        if (has_least_period(p, m) != has_least_period(q, m)) {
          CAPTURE(p.to_string(), m);
          FAIL("reversal changed a forced period");
        }
      }
      if (is_minimal(p) != is_minimal(q)) {
        CAPTURE(p.to_string());
        FAIL("reversal changed minimality");
      }
    }
  }
  SUCCEED();
}

TEST_CASE("forced-period sets are closed downward in the forcing order",
          "[forcing]") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : all_cyclic(n)) {
      bool has[10] = {};
      for (std::uint64_t m = 1; m <= 9; ++m) has[m] = has_least_period(p, m);
      for (std::uint64_t m = 1; m <= 9; ++m) {
        if (!has[m]) continue;
        for (std::uint64_t k = 1; k <= 9; ++k) {
          if (sharkovskii_less(k, m) && !has[k]) {
            CAPTURE(p.to_string(), m, k);
            FAIL("down-set closure violated");
          }
        }
      }
    }
  }
  SUCCEED();
}

TEST_CASE("digraph criterion matches the exact piecewise-linear oracle",
          "[forcing]") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : all_cyclic(n)) {
      for (std::uint64_t m = 1; m <= 7; ++m) {
        const bool fast = has_least_period(p, m);
        const bool slow = intervaldyn_test::oracle_has_least_period(p, m);
        if (fast != slow) {
          CAPTURE(p.to_string(), m, fast, slow);
          FAIL("digraph answer disagrees with the oracle");
        }
      }
    }
  }
  SUCCEED();
}

TEST_CASE("oracle agreement extends to longer patterns and periods",
          "[oracle-long]") {
  for (int n = 7; n <= 8; ++n) {
    for (const auto& p : all_cyclic(n)) {
      for (std::uint64_t m = 1; m <= 8; ++m) {
        const bool fast = has_least_period(p, m);
        const bool slow = intervaldyn_test::oracle_has_least_period(p, m);
        if (fast != slow) {
          CAPTURE(p.to_string(), m, fast, slow);
          FAIL("digraph answer disagrees with the oracle");
        }
      }
    }
  }
  SUCCEED();
}
