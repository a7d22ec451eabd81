#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "intervaldyn/catalog.hpp"
#include "intervaldyn/cyclic_permutation.hpp"
#include "intervaldyn/forced_periods.hpp"

using intervaldyn::canonical_representative;
using intervaldyn::CyclicPermutation;
using intervaldyn::match_catalog;
using intervaldyn::second_minimal_7_catalog;
using intervaldyn::shape_signature;
using intervaldyn::spiral_pattern;

TEST_CASE("the period-7 catalog lists nine distinct next-to-extremal classes",
          "[catalog]") {
  const auto& cat = second_minimal_7_catalog();
  REQUIRE(cat.size() == 9);
  std::set<std::string> canon;
  for (const auto& p : cat) {
    CHECK(p.size() == 7);
    CHECK(intervaldyn::is_second_minimal(p));
    canon.insert(canonical_representative(p).to_string());
  }
  // Distinct as classes up to reversal, not merely as permutations.
  CHECK(canon.size() == 9);
}

TEST_CASE("catalog lookup identifies patterns and their reversals",
          "[catalog]") {
  const auto& cat = second_minimal_7_catalog();
  for (size_t i = 0; i < cat.size(); ++i) {
    CHECK(match_catalog(cat[i]) == static_cast<int>(i) + 1);
    CHECK(match_catalog(cat[i].inverse()) == static_cast<int>(i) + 1);
  }
  // Wrong period: no match.
  CHECK_FALSE(match_catalog(CyclicPermutation({3, 5, 4, 2, 1})).has_value());
  // Right period but extremal rather than next-to-extremal: no match.
  CHECK_FALSE(match_catalog(spiral_pattern(7)).has_value());
}

TEST_CASE("spiral patterns realize the extremal odd orbits", "[catalog]") {
  CHECK(spiral_pattern(5) == CyclicPermutation({3, 5, 4, 2, 1}));
  CHECK(spiral_pattern(7) == CyclicPermutation({4, 7, 6, 5, 3, 2, 1}));
  CHECK(spiral_pattern(3) == CyclicPermutation({2, 3, 1}));
  for (int n = 5; n <= 11; n += 2) {
    CAPTURE(n);
    CHECK(intervaldyn::is_minimal(spiral_pattern(n)));
    CHECK_FALSE(intervaldyn::has_least_period(spiral_pattern(n), n - 2));
  }
  CHECK_THROWS_AS(spiral_pattern(4), intervaldyn::domain_error);
  CHECK_THROWS_AS(spiral_pattern(1), intervaldyn::domain_error);
}

TEST_CASE("monotonicity signatures name the interior turning points",
          "[catalog]") {
  CHECK(shape_signature(CyclicPermutation({3, 5, 4, 2, 1})) == "max");
  CHECK(shape_signature(CyclicPermutation({2, 1})) == "");
  CHECK(shape_signature(CyclicPermutation({1})) == "");
  CHECK(shape_signature(CyclicPermutation({2, 3, 1})) == "max");
  // Down, up, down, up: three interior turning points.
  CHECK(shape_signature(CyclicPermutation({7, 4, 6, 5, 3, 1, 2})) ==
        "min-max-min");
  // Every catalog entry is unimodal-or-more complex but never monotone.
  for (const auto& p : second_minimal_7_catalog()) {
    CHECK_FALSE(shape_signature(p).empty());
  }
}
