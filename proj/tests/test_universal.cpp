#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "intervaldyn/universal.hpp"

using intervaldyn::cascade_estimate;
using intervaldyn::doubling_operator;
using intervaldyn::family_iterate;
using intervaldyn::family_x_max;
using intervaldyn::kFeigenbaumDelta;
using intervaldyn::UnimodalFamily;
using intervaldyn::universal_function_approx;

namespace {

// Symmetric, strictly ascending grid with an exact zero in the middle.
std::vector<double> symmetric_grid(double hi, int count) {
  std::vector<double> out(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i)
    out[static_cast<size_t>(i)] = -hi + 2.0 * hi * i / (count - 1);
  for (int i = 0; i < count / 2; ++i)
    out[static_cast<size_t>(count - 1 - i)] = -out[static_cast<size_t>(i)];
  if (count % 2 == 1) out[static_cast<size_t>(count / 2)] = 0.0;
  return out;
}

}  // namespace

TEST_CASE("the doubling transformation of the reference quadratic bump",
          "[universal]") {
  const auto psi = [](double x) { return 1.0 - 1.5 * x * x; };
  const auto doubled = doubling_operator(psi);
  CHECK(doubled.a == Catch::Approx(0.5).margin(1e-15));
  CHECK(doubled.b == Catch::Approx(0.625).margin(1e-15));
  CHECK(doubled(0.0) == Catch::Approx(1.0).margin(1e-15));
  CHECK(doubled(1.0) == Catch::Approx(-0.828125).margin(1e-15));
}

TEST_CASE("rescaling-condition failures are reported by inequality",
          "[universal]") {
  // Too flat: the rescaling factor -psi(1) comes out negative, so the
  // doubled branch value cannot stay below it.
  const auto flat = [](double x) { return 1.0 - 0.1 * x * x; };
  CHECK_THROWS_AS(doubling_operator(flat),
                  intervaldyn::not_renormalizable_error);
  // Asymmetric input is rejected before the inequalities are consulted.
  const auto asym = [](double x) { return 1.0 - 1.5 * x * x + 0.01 * x; };
  CHECK_THROWS_AS(doubling_operator(asym), intervaldyn::domain_error);
  // Off-normalized input: psi(0) must be 1.
  const auto off = [](double x) { return 0.9 - 1.5 * x * x; };
  CHECK_THROWS_AS(doubling_operator(off), intervaldyn::domain_error);
}

TEST_CASE("quadratic bumps along the renormalizable arc stay normalized",
          "[universal]") {
  for (int i = 0; i < 20; ++i) {
    const double c = 1.36 + 0.008 * i;
    CAPTURE(c);
    const auto psi = [c](double x) { return 1.0 - c * x * x; };
    const auto doubled = doubling_operator(psi);
    CHECK(doubled(0.0) == Catch::Approx(1.0).margin(1e-12));
    CHECK(doubled.a > 0.0);
    CHECK(doubled.b > doubled.a);
  }
}

TEST_CASE("rescaled iterates contract toward a common limit map",
          "[universal]") {
  const auto grid = symmetric_grid(0.35, 201);
  for (int q : {1, 3, 7}) {
    CAPTURE(q);
    const auto v1 =
        universal_function_approx(UnimodalFamily::logistic, q, 1, 1, grid);
    const auto v2 =
        universal_function_approx(UnimodalFamily::logistic, q, 1, 2, grid);
    const auto v3 =
        universal_function_approx(UnimodalFamily::logistic, q, 1, 3, grid);
    double d12 = 0.0, d23 = 0.0;
    for (size_t i = 0; i < grid.size(); ++i) {
      d12 = std::max(d12, std::fabs(v1.values[i] - v2.values[i]));
      d23 = std::max(d23, std::fabs(v2.values[i] - v3.values[i]));
    }
    CHECK(d12 > d23);
    // Depth metadata is carried through.
    CHECK(v3.q == q);
    CHECK(v3.j == 1);
    CHECK(v3.n == 3);
    CHECK(v3.alpha < -1.0);
  }
}

TEST_CASE("peak values of successive approximants form a Cauchy ratio chain",
          "[universal]") {
  const auto grid = symmetric_grid(0.35, 201);
  const size_t mid = grid.size() / 2;
  double v0[5];
  for (int n = 1; n <= 4; ++n)
    v0[n] = universal_function_approx(UnimodalFamily::logistic, 1, 1, n, grid)
                .values[mid];
  const double r1 = v0[1] / v0[2];
  const double r2 = v0[2] / v0[3];
  const double r3 = v0[3] / v0[4];
  CHECK(r1 == Catch::Approx(1.0485).margin(2e-3));
  CHECK(r2 == Catch::Approx(1.0185).margin(2e-3));
  CHECK(r3 == Catch::Approx(1.0055).margin(2e-3));
  CHECK(r1 > r2);
  CHECK(r2 > r3);
  CHECK(r3 > 1.0);
}

TEST_CASE("depth zero reduces to the centered q-iterate at the doubled rung",
          "[universal]") {
  const auto grid = symmetric_grid(0.35, 201);
  const auto v0 =
      universal_function_approx(UnimodalFamily::logistic, 3, 1, 0, grid);
  const size_t idx = 150;  // grid point 0.175
  const double direct =
      family_iterate(UnimodalFamily::logistic, v0.lambda, 0.5 + grid[idx], 3) -
      0.5;
  CHECK(v0.values[idx] == Catch::Approx(direct).margin(1e-15));
}

TEST_CASE("sampling at the accumulation parameter approaches the fixed map",
          "[universal]") {
  const auto est = cascade_estimate(UnimodalFamily::logistic, 1, 1, 5);
  // Geometric-series limit of the rung sequence: the gaps shrink by the
  // universal ratio, so the accumulation point is last + gap / (delta - 1).
  const double last = est.ladder.back().lambda;
  const double prev = est.ladder[est.ladder.size() - 2].lambda;
  const double lam_inf = last + (last - prev) / (kFeigenbaumDelta - 1.0);
  const double alpha = est.alphas.back();
  const double x_max = family_x_max(UnimodalFamily::logistic);

  const auto sample = [&](int n, double x) {
    double scale = 1.0;
    for (int i = 0; i < n; ++i) scale *= alpha;
    const double arg = x_max + x / scale;
    return scale *
           (family_iterate(UnimodalFamily::logistic, lam_inf, arg, 1 << n) -
            x_max);
  };

  double prev_res = -1.0;
  for (int n = 1; n <= 4; ++n) {
    const double c = sample(n, 0.0);
    CHECK(c == Catch::Approx(0.3937).margin(7e-3));
    const auto g = [&, n, c](double x) { return sample(n, x * c) / c; };
    const auto doubled = doubling_operator(g);
    double res = 0.0;
    for (int k = -40; k <= 40; ++k) {
      const double x = k / 100.0;
      res = std::max(res, std::fabs(doubled(x) - g(x)));
    }
    CAPTURE(n, res, prev_res);
    if (prev_res >= 0.0) CHECK(res < prev_res);
    prev_res = res;
  }
  // By depth four the map reproduces itself under doubling to a few 1e-5.
  CHECK(prev_res < 5e-5);
}

TEST_CASE("approximant inputs are validated", "[universal]") {
  const auto grid = symmetric_grid(0.35, 201);
  CHECK_THROWS_AS(
      universal_function_approx(UnimodalFamily::logistic, 3, 1, 5, grid),
      intervaldyn::domain_error);
  CHECK_THROWS_AS(universal_function_approx(UnimodalFamily::logistic, 3, 1, 1,
                                            std::vector<double>{}),
                  intervaldyn::domain_error);
  // Asymmetric grid.
  CHECK_THROWS_AS(
      universal_function_approx(UnimodalFamily::logistic, 3, 1, 1,
                                std::vector<double>{-0.3, 0.0, 0.2}),
      intervaldyn::domain_error);
  // Not ascending.
  CHECK_THROWS_AS(
      universal_function_approx(UnimodalFamily::logistic, 3, 1, 1,
                                std::vector<double>{0.2, 0.0, -0.2}),
      intervaldyn::domain_error);
}
