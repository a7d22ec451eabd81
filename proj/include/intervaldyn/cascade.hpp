#pragma once

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include "errors.hpp"
#include "superstable.hpp"
#include "unimodal.hpp"

// Convergence estimates along period-doubling ladders: parameter-gap ratios
// (whose limit is the doubling constant of the family), critical-orbit
// distance ratios (whose limit is the rescaling constant), accumulation-point
// extrapolation, and the geometric rate at which first appearances of
// successive odd periods pile up.

namespace intervaldyn {

// Gap-ratio limit of the quadratic-maximum doubling cascade.  Accumulation
// points are extrapolated from the deepest resolved gap with this constant,
// which converges much faster than re-deriving the ratio from the same
// shallow ladder that is being extrapolated.
inline constexpr double kFeigenbaumDelta = 4.669201609102990;

// Gap ratios (lambda_{s-1} - lambda_{s-2}) / (lambda_s - lambda_{s-1}) for
// s = 2..S over a ladder of parameters lambda_0..lambda_S.
inline std::vector<double> feigenbaum_delta(
    const std::vector<double>& lambdas) {
  if (lambdas.size() < 3)
    throw domain_error("feigenbaum_delta: need at least three rungs");
  std::vector<double> ratios;
  ratios.reserve(lambdas.size() - 2);
  for (size_t s = 2; s < lambdas.size(); ++s) {
    const double denom = lambdas[s] - lambdas[s - 1];
    if (denom == 0.0)
      throw degenerate_ladder_error(
          "feigenbaum_delta: repeated rung parameter");
    ratios.push_back((lambdas[s - 1] - lambdas[s - 2]) / denom);
  }
  return ratios;
}

// Geometric extrapolation of the ladder's accumulation point from its last
// gap: lambda_inf = lambda_S + (lambda_S - lambda_{S-1}) / delta.
inline double lambda_inf_extrapolate(const std::vector<double>& lambdas,
                                     double delta) {
  if (lambdas.size() < 2)
    throw domain_error("lambda_inf_extrapolate: need at least two rungs");
  if (!(delta > 1.0))
    throw divergent_extrapolation_error(
        "lambda_inf_extrapolate: gap ratio must exceed 1");
  const double last = lambdas[lambdas.size() - 1];
  const double prev = lambdas[lambdas.size() - 2];
  return last + (last - prev) / delta;
}

namespace detail {

// Directed distance from the critical point to the nearest other element of
// one superstable orbit, measured at that orbit's own parameter.  The orbit
// passes through the critical point; the returned value is
// x_max - (closest orbit element != x_max), so consecutive ladder rungs
// alternate its sign.
inline double nearest_orbit_distance(double x_max,
                                     const SuperstableRecord& rec) {
  const std::vector<double>& orbit = rec.orbit;
  size_t self = 0;
  double self_dist = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < orbit.size(); ++i) {
    const double dist = std::fabs(orbit[i] - x_max);
    if (dist < self_dist) {
      self_dist = dist;
      self = i;
    }
  }
  if (self_dist > 1e-8)
    throw degeneracy_error(
        "nearest_orbit_distance: orbit does not pass through the critical "
        "point");
  double best = std::numeric_limits<double>::infinity();
  double signed_value = 0.0;
  for (size_t i = 0; i < orbit.size(); ++i) {
    if (i == self) continue;
    const double dist = std::fabs(orbit[i] - x_max);
    if (dist < best) {
      best = dist;
      signed_value = x_max - orbit[i];
    }
  }
  if (best < 1e-13)
    throw precision_floor_error(
        "nearest orbit distance at period " + std::to_string(rec.period) +
        " fell below the double-precision floor");
  return signed_value;
}

// d_s for each rung of a ladder: the nearest-other-element distance of rung
// s's orbit at its own parameter.  A period-1 rung (the base of the plain
// doubling cascade) has no other element and contributes no distance, so for
// q = 1 the sequence starts at the period-2 rung.
inline std::vector<double> orbit_distances(
    UnimodalFamily fam, const std::vector<SuperstableRecord>& ladder) {
  if (ladder.empty())
    throw domain_error("orbit_distances: ladder must not be empty");
  const double x_max = family_x_max(fam);
  std::vector<double> d;
  d.reserve(ladder.size());
  for (const SuperstableRecord& rec : ladder) {
    if (rec.period == 1) continue;
    d.push_back(nearest_orbit_distance(x_max, rec));
  }
  return d;
}

}  // namespace detail

// Distance ratios d_{s-1} / d_s along a doubling ladder (negative, since
// consecutive rungs' nearest returns straddle the critical point).  d_s is
// the directed distance from the critical point to the nearest other element
// of rung s's orbit at that rung's own parameter; the first ratio compares
// the base orbit with its first doubling.  For q = 1 the base rung is a
// fixed point with no companion element, so the ratios start one level
// deeper.
inline std::vector<double> alpha_ratios(
    UnimodalFamily fam, int q, int j,
    const std::vector<SuperstableRecord>& ladder) {
  if (ladder.empty() || ladder[0].period != q || ladder[0].appearance != j)
    throw domain_error("alpha_ratios: ladder does not start at orbit (q, j)");
  if (ladder.size() < 3)
    throw domain_error("alpha_ratios: need a ladder of depth >= 2");
  const std::vector<double> d = detail::orbit_distances(fam, ladder);
  std::vector<double> ratios;
  ratios.reserve(d.size() - 1);
  for (size_t s = 1; s < d.size(); ++s) ratios.push_back(d[s - 1] / d[s]);
  return ratios;
}

// Gap ratios of a strictly descending parameter sequence (first appearances
// of successive odd periods): (l_{i-1} - l_i) / (l_i - l_{i+1}).
inline std::vector<double> block_rate(const std::vector<double>& lambdas) {
  if (lambdas.size() < 3)
    throw domain_error("block_rate: need at least three parameters");
  for (size_t i = 0; i + 1 < lambdas.size(); ++i)
    if (!(lambdas[i] > lambdas[i + 1]))
      throw ordering_error(
          "block_rate: parameter sequence is not strictly descending");
  std::vector<double> ratios;
  ratios.reserve(lambdas.size() - 2);
  for (size_t i = 1; i + 1 < lambdas.size(); ++i)
    ratios.push_back((lambdas[i - 1] - lambdas[i]) /
                     (lambdas[i] - lambdas[i + 1]));
  return ratios;
}

// First appearances of the odd periods 3, 5, ..., q_max, in ascending period
// order.  Periods 3 and 5 appear once each in the appearance band; every
// later first appearance is bracketed below the previous one by a window
// 1.6x the width of the previous gap.
inline std::vector<SuperstableRecord> first_appearances(UnimodalFamily fam,
                                                        int q_max) {
  if (q_max < 3 || q_max % 2 == 0)
    throw domain_error("first_appearances: q_max must be odd and >= 3");
  if (q_max > 41)
    throw resource_error(
        "first appearances beyond period 41 exceed the resolvable gap");
  std::vector<SuperstableRecord> out;
  for (int q = 3; q <= std::min(q_max, 5); q += 2) {
    auto roots = find_superstable(fam, q, default_scan_config(fam, q));
    if (roots.empty())
      throw coverage_error("first_appearances: no period-" +
                           std::to_string(q) + " parameter in the band");
    out.push_back(roots.front());
    out.back().appearance = 1;
  }
  for (int q = 7; q <= q_max; q += 2) {
    const double prev = out[out.size() - 1].lambda;
    const double gap = out[out.size() - 2].lambda - prev;
    const double lo = prev - 1.6 * gap;
    const double hi = prev - 1e-3 * gap;
    auto roots =
        find_superstable(fam, q, detail::window_config(lo, hi, q));
    if (roots.empty())
      throw coverage_error("first_appearances: no period-" +
                           std::to_string(q) +
                           " parameter in the continuation window");
    out.push_back(roots.back());  // later appearances lie above the window
    out.back().appearance = 1;
  }
  return out;
}

// A full convergence report for one ladder: the rungs, the parameter-gap
// ratios, the orbit-distance ratios with the distances themselves, and the
// accumulation point extrapolated from the deepest gap with the universal
// gap-ratio constant.
struct CascadeEstimate {
  std::vector<SuperstableRecord> ladder;
  std::vector<double> deltas;
  std::vector<double> alphas;
  std::vector<double> d_values;
  double lambda_inf;
};

inline CascadeEstimate cascade_estimate(UnimodalFamily fam, int q, int j,
                                        int s_max,
                                        const ScanConfig& base_cfg) {
  if (s_max < 2)
    throw domain_error("cascade_estimate: depth must be >= 2 for gap ratios");
  CascadeEstimate est;
  est.ladder = period_doubling_ladder(fam, q, j, s_max, base_cfg);
  std::vector<double> lambdas;
  lambdas.reserve(est.ladder.size());
  for (const auto& r : est.ladder) lambdas.push_back(r.lambda);
  est.deltas = feigenbaum_delta(lambdas);
  est.d_values = detail::orbit_distances(fam, est.ladder);
  est.alphas.reserve(est.d_values.size() - 1);
  for (size_t s = 1; s < est.d_values.size(); ++s)
    est.alphas.push_back(est.d_values[s - 1] / est.d_values[s]);
  est.lambda_inf = lambda_inf_extrapolate(lambdas, kFeigenbaumDelta);
  return est;
}

inline CascadeEstimate cascade_estimate(UnimodalFamily fam, int q, int j,
                                        int s_max) {
  return cascade_estimate(fam, q, j, s_max, default_ladder_config(fam, q));
}

}  // namespace intervaldyn
