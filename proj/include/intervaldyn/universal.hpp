#pragma once

#include <cmath>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cascade.hpp"
#include "errors.hpp"
#include "superstable.hpp"
#include "unimodal.hpp"

// Renormalization machinery: the doubling transformation on symmetric
// unimodal maps of [-1,1], and finite-depth approximants of the universal
// map that period-doubling ladders converge to in rescaled coordinates.

namespace intervaldyn {

// The doubling transformation applied to one map psi: evaluates
// -(1/a) psi(psi(-a x)) with a = -psi(1).  Instances come from
// doubling_operator(), which validates the rescaling condition first.
template <typename Psi>
struct DoubledMap {
  Psi inner;
  double a = 0.0;  // rescaling factor -psi(1)
  double b = 0.0;  // psi(a), outer edge of the core interval psi^2 preserves

  double operator()(double x) const { return -inner(inner(-a * x)) / a; }
};

// Builds the doubled map of a symmetric unimodal psi: [-1,1] -> [-1,1] with
// psi(0) = 1.  Requires the rescaling chain 0 < psi(b) < a < b < 1 (with
// a = -psi(1), b = psi(a)), which guarantees psi^2 maps [-a,a] into itself;
// the violated inequality is named in the error.  The normalization
// (doubled map)(0) = 1 then holds automatically.
template <typename Psi>
DoubledMap<std::decay_t<Psi>> doubling_operator(Psi&& psi) {
  using Decayed = std::decay_t<Psi>;
  Decayed f = std::forward<Psi>(psi);
  if (std::fabs(f(0.0) - 1.0) > 1e-12)
    throw domain_error("doubling_operator: psi(0) must equal 1");
  for (int k = 1; k <= 32; ++k) {
    const double x = k / 32.0;
    if (std::fabs(f(x) - f(-x)) > 1e-9)
      throw domain_error("doubling_operator: psi must be symmetric about 0");
  }
  const double a = -f(1.0);
  const double b = f(a);
  const double psi_b = f(b);
  if (!(0.0 < psi_b))
    throw not_renormalizable_error("doubling_operator: 0 < psi(b) fails");
  if (!(psi_b < a))
    throw not_renormalizable_error("doubling_operator: psi(b) < a fails");
  if (!(a < b))
    throw not_renormalizable_error("doubling_operator: a < b fails");
  if (!(b < 1.0))
    throw not_renormalizable_error("doubling_operator: b < 1 fails");
  return DoubledMap<Decayed>{std::move(f), a, b};
}

// One finite-depth approximant of the universal map, sampled on a grid of
// critical-point-centered coordinates.
struct UniversalFunctionSample {
  int q = 0;       // odd base period of the ladder
  int j = 0;       // appearance index of the base orbit
  int n = 0;       // approximation depth
  double alpha = 0.0;   // measured distance ratio used for rescaling
  double lambda = 0.0;  // rung parameter the sample is evaluated at
  std::vector<double> grid;
  std::vector<double> values;
};

// Depth-n approximant along the (q, j) doubling ladder:
//   v_n(x) = alpha^n * (f^{q 2^n} at rung n+1)(x_max + x / alpha^n) - x_max
// in coordinates centered at the critical point, where alpha is the deepest
// measured distance ratio of the ladder (negative, so consecutive depths
// sample mirrored windows).  Depth 0 is the centered q-iterate at the first
// doubled rung's parameter.
inline UniversalFunctionSample universal_function_approx(
    UnimodalFamily fam, int q, int j, int n,
    const std::vector<double>& grid) {
  if (n < 0 || n > 4)
    throw domain_error("universal_function_approx: depth must be in 0..4");
  if (grid.empty())
    throw domain_error("universal_function_approx: grid must not be empty");
  for (size_t i = 0, k = grid.size(); i < k; ++i) {
    if (i + 1 < k && !(grid[i] < grid[i + 1]))
      throw domain_error(
          "universal_function_approx: grid must be strictly ascending");
    if (std::fabs(grid[i] + grid[k - 1 - i]) > 1e-12)
      throw domain_error(
          "universal_function_approx: grid must be symmetric about 0");
  }

  const int depth = std::max(n + 1, 2);
  const std::vector<SuperstableRecord> ladder =
      period_doubling_ladder(fam, q, j, depth, default_ladder_config(fam, q));
  const std::vector<double> alphas = alpha_ratios(fam, q, j, ladder);
  const double alpha = alphas.back();

  const double x_max = family_x_max(fam);
  double scale = 1.0;
  for (int i = 0; i < n; ++i) scale *= alpha;
  const int iterations = q << n;

  UniversalFunctionSample out;
  out.q = q;
  out.j = j;
  out.n = n;
  out.alpha = alpha;
  out.lambda = ladder[static_cast<size_t>(n) + 1].lambda;
  out.grid = grid;
  out.values.reserve(grid.size());
  for (double x : grid) {
    const double arg = x_max + x / scale;
    if (arg < 0.0 || arg > 1.0)
      throw domain_error(
          "universal_function_approx: rescaled argument escapes [0,1] at "
          "grid point " +
          std::to_string(x));
    out.values.push_back(
        scale * (family_iterate(fam, out.lambda, arg, iterations) - x_max));
  }
  return out;
}

}  // namespace intervaldyn
