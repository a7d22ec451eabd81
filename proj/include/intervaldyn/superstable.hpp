#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclic_permutation.hpp"
#include "errors.hpp"
#include "unimodal.hpp"

// Superstable-orbit parameters: a period-p orbit through the critical point
// exists exactly where the p-th iterate of the critical point returns to it,
// so those parameters are roots of f_lambda^p(x_max) - x_max.  This header
// scans for the roots, indexes appearances in ascending parameter order,
// extracts the realized pattern from the numeric orbit, and continues
// period-doubling ladders rung by rung.

namespace intervaldyn {

struct ScanConfig {
  double lambda_lo = 0.0;
  double lambda_hi = 1.0;
  double grid_density = 16384.0;  // sample points per unit of lambda
  double refine_tolerance = 1e-14;
  double separation = 1e-10;  // minimum distance between orbit points
};

struct SuperstableRecord {
  UnimodalFamily family;
  int period;
  double lambda;
  int appearance;              // ascending rank of lambda within its scan
  std::vector<double> orbit;   // the p orbit points, sorted ascending
  CyclicPermutation permutation;
  double residual;             // f^p(x_max) - x_max at lambda
};

// Ladder continuation failed at some rung; carries the rungs found so far.
class partial_ladder_error : public std::runtime_error {
 public:
  partial_ladder_error(const std::string& message,
                       std::vector<SuperstableRecord> prefix)
      : std::runtime_error(message), prefix_(std::move(prefix)) {}
  const std::vector<SuperstableRecord>& prefix() const { return prefix_; }

 private:
  std::vector<SuperstableRecord> prefix_;
};

inline double superstable_residual(UnimodalFamily fam, double lambda, int p) {
  if (p < 1) throw domain_error("superstable_residual: period must be >= 1");
  const double x_max = family_x_max(fam);
  return family_iterate(fam, lambda, x_max, p) - x_max;
}

namespace detail {

// Orbit of x_max over one period, sorted ascending.
inline std::vector<double> critical_orbit_sorted(UnimodalFamily fam,
                                                 double lambda, int p) {
  std::vector<double> orbit;
  orbit.reserve(static_cast<size_t>(p));
  double x = family_x_max(fam);
  for (int k = 0; k < p; ++k) {
    orbit.push_back(x);
    x = family_eval(fam, lambda, x);
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

inline CyclicPermutation permutation_of_orbit(UnimodalFamily fam,
                                              double lambda,
                                              const std::vector<double>& orbit,
                                              double separation) {
  const int p = static_cast<int>(orbit.size());
  for (int i = 0; i + 1 < p; ++i)
    if (orbit[static_cast<size_t>(i) + 1] - orbit[static_cast<size_t>(i)] <
        separation)
      throw degeneracy_error(
          "orbit points closer than the separation tolerance");
  std::vector<int> image(static_cast<size_t>(p));
  for (int i = 0; i < p; ++i) {
    const double y = family_eval(fam, lambda, orbit[static_cast<size_t>(i)]);
    // rank of the nearest orbit point
    const auto it = std::lower_bound(orbit.begin(), orbit.end(), y);
    int idx = static_cast<int>(it - orbit.begin());
    if (idx == p ||
        (idx > 0 && y - orbit[static_cast<size_t>(idx) - 1] <
                        orbit[static_cast<size_t>(idx)] - y))
      --idx;
    image[static_cast<size_t>(i)] = idx + 1;
  }
  return CyclicPermutation(image);  // validates single-cycle structure
}

inline std::vector<double> scan_period_roots(UnimodalFamily fam, int p,
                                             const ScanConfig& cfg) {
  const double width = cfg.lambda_hi - cfg.lambda_lo;
  const long long cells = std::max<long long>(
      2, static_cast<long long>(std::ceil(width * cfg.grid_density)));
  std::vector<double> roots;
  double prev_lambda = cfg.lambda_lo;
  double prev_res = superstable_residual(fam, prev_lambda, p);
  for (long long i = 1; i <= cells; ++i) {
    const double lambda = cfg.lambda_lo + width * static_cast<double>(i) /
                                              static_cast<double>(cells);
    const double res = superstable_residual(fam, lambda, p);
    if (prev_res == 0.0) {
      roots.push_back(prev_lambda);
    } else if ((prev_res < 0.0 && res > 0.0) || (prev_res > 0.0 && res < 0.0)) {
      double lo = prev_lambda, hi = lambda, rlo = prev_res;
      while (hi - lo > cfg.refine_tolerance) {
        const double mid = 0.5 * (lo + hi);
        const double rmid = superstable_residual(fam, mid, p);
        if (rmid == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((rlo < 0.0) == (rmid < 0.0)) {
          lo = mid;
          rlo = rmid;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_lambda = lambda;
    prev_res = res;
  }
  // merge near-duplicates
  std::vector<double> merged;
  for (double r : roots)
    if (merged.empty() || r - merged.back() > 1e-12) merged.push_back(r);
  return merged;
}

// Absolute closeness below which a root of the p-th-iterate equation is
// treated as belonging to a proper divisor period instead.
constexpr double kDivisorRejectTolerance = 1e-8;

inline bool has_proper_divisor_period(UnimodalFamily fam, double lambda,
                                      int p) {
  for (int d = 1; d < p; ++d)
    if (p % d == 0 &&
        std::fabs(superstable_residual(fam, lambda, d)) <
            kDivisorRejectTolerance)
      return true;
  return false;
}

}  // namespace detail

// All parameters in [lambda_lo, lambda_hi] carrying a superstable orbit of
// least period p, sorted ascending, with appearance ranks assigned.
inline std::vector<SuperstableRecord> find_superstable(UnimodalFamily fam,
                                                       int p,
                                                       const ScanConfig& cfg) {
  if (p < 1) throw domain_error("find_superstable: period must be >= 1");
  if (!(cfg.lambda_lo < cfg.lambda_hi) || !(cfg.grid_density > 0.0) ||
      !(cfg.refine_tolerance > 0.0))
    throw domain_error("find_superstable: invalid scan configuration");
  std::vector<SuperstableRecord> records;
  for (double root : detail::scan_period_roots(fam, p, cfg)) {
    if (detail::has_proper_divisor_period(fam, root, p)) continue;
    std::vector<double> orbit = detail::critical_orbit_sorted(fam, root, p);
    bool separated = true;
    for (size_t i = 0; i + 1 < orbit.size(); ++i)
      if (orbit[i + 1] - orbit[i] < cfg.separation) separated = false;
    if (!separated) continue;  // degenerate root: not a genuine p-orbit
    CyclicPermutation perm =
        detail::permutation_of_orbit(fam, root, orbit, cfg.separation);
    records.push_back(SuperstableRecord{
        fam, p, root, static_cast<int>(records.size()) + 1, std::move(orbit),
        std::move(perm), superstable_residual(fam, root, p)});
  }
  return records;
}

// The realized pattern of a superstable orbit: sort the orbit ascending and
// record which rank each point maps to.
inline CyclicPermutation orbit_permutation(const SuperstableRecord& rec) {
  ScanConfig defaults;
  return detail::permutation_of_orbit(rec.family, rec.lambda, rec.orbit,
                                      defaults.separation);
}

namespace detail {

// Does `cand` (period 2P) continue `prev` (period P) by period doubling?
// A doubled orbit swaps the lower and upper halves of its point set, and its
// square restricted to the lower half must reproduce the previous pattern
// (or the inverse pattern, for the mirrored interleaving).
inline bool doubling_match(const SuperstableRecord& prev,
                           const SuperstableRecord& cand) {
  const int p = prev.period;
  if (cand.period != 2 * p) return false;
  if (p == 1) return true;  // any 2-orbit doubles the fixed point
  const auto& sigma = cand.permutation;
  for (int i = 1; i <= p; ++i)
    if (sigma(i) <= p) return false;
  for (int i = p + 1; i <= 2 * p; ++i)
    if (sigma(i) > p) return false;
  std::vector<int> tau(static_cast<size_t>(p));
  for (int i = 1; i <= p; ++i)
    tau[static_cast<size_t>(i - 1)] = sigma(sigma(i));
  const CyclicPermutation tau_perm(tau);
  return tau_perm == prev.permutation ||
         tau_perm == prev.permutation.inverse();
}

inline ScanConfig window_config(double lo, double hi, int period) {
  ScanConfig cfg;
  cfg.lambda_lo = lo;
  cfg.lambda_hi = hi;
  const double width = hi - lo;
  cfg.grid_density = std::max(
      {16384.0, 4096.0 * static_cast<double>(period), 8192.0 / width});
  return cfg;
}

// The next ladder rung above/below `ladder.back()`.  The first doubling is
// located by appearance rank (the rank is preserved along a ladder); deeper
// doublings live in a geometrically shrinking window next to the previous
// rung, where candidates are tried nearest-first.  Every accepted rung must
// pass the pattern-doubling check.
inline SuperstableRecord next_rung(UnimodalFamily fam, int q, int j,
                                   const std::vector<SuperstableRecord>& ladder,
                                   const ScanConfig& base_cfg) {
  const int s = static_cast<int>(ladder.size());  // depth being added
  const bool ascending = q == 1;                  // power ladders ascend
  const double prev = ladder.back().lambda;
  const int period = (1 << s) * q;

  // keep every window inside the parameter domain of the families
  const auto clamp01 = [](double& lo, double& hi) {
    lo = std::max(lo, 1e-9);
    hi = std::min(hi, 1.0 - 1e-9);
  };

  std::vector<SuperstableRecord> candidates;
  if (s == 1) {
    double lo, hi;
    if (ascending) {
      lo = prev + 1e-6;
      hi = base_cfg.lambda_hi;
    } else {
      lo = base_cfg.lambda_lo;
      hi = prev - 1e-9;
    }
    clamp01(lo, hi);
    candidates = find_superstable(fam, period, window_config(lo, hi, period));
    if (ascending) {
      // the sole doubling above the base rung is the cascade continuation
      for (const auto& cand : candidates)
        if (doubling_match(ladder.back(), cand)) return cand;
    } else if (static_cast<int>(candidates.size()) >= j) {
      // appearance rank carries over from the base orbit to its doubling
      const SuperstableRecord& cand = candidates[static_cast<size_t>(j - 1)];
      if (doubling_match(ladder.back(), cand)) return cand;
    }
  } else {
    const double gap = ladder[ladder.size() - 2].lambda - prev;  // signed
    double lo = prev - 0.5 * gap;
    double hi = prev - 1e-4 * gap;
    if (lo > hi) std::swap(lo, hi);
    clamp01(lo, hi);
    candidates = find_superstable(fam, period, window_config(lo, hi, period));
    std::sort(candidates.begin(), candidates.end(),
              [&](const SuperstableRecord& a, const SuperstableRecord& b) {
                return std::fabs(a.lambda - prev) < std::fabs(b.lambda - prev);
              });
    for (const auto& cand : candidates)
      if (doubling_match(ladder.back(), cand)) return cand;
  }
  throw partial_ladder_error(
      "no doubling continuation of period " + std::to_string(period) +
          " found in the continuation window",
      ladder);
}

}  // namespace detail

// The parameter ladder lambda_{s,j} of superstable 2^s q orbits continuing
// the j-th appearance of the q orbit, s = 0..s_max.  Odd-q ladders descend
// in lambda toward their accumulation point; the q = 1 power ladder ascends.
inline std::vector<SuperstableRecord> period_doubling_ladder(
    UnimodalFamily fam, int q, int j, int s_max, const ScanConfig& base_cfg) {
  if (q < 1 || q % 2 == 0)
    throw domain_error("period_doubling_ladder: q must be odd");
  if (j < 1)
    throw domain_error("period_doubling_ladder: appearance must be >= 1");
  if (s_max < 0 || s_max > 5)
    throw domain_error("period_doubling_ladder: depth must be in 0..5");

  std::vector<SuperstableRecord> ladder;
  {
    auto base = find_superstable(fam, q, base_cfg);
    if (static_cast<int>(base.size()) < j)
      throw partial_ladder_error(
          "base orbit appearance not found in the scan range", {});
    ladder.push_back(base[static_cast<size_t>(j - 1)]);
  }
  for (int s = 1; s <= s_max; ++s) {
    ladder.push_back(detail::next_rung(fam, q, j, ladder, base_cfg));
    ladder.back().appearance = j;
  }
  return ladder;
}

// The appearance band of a family: from just above the accumulation point of
// the power ladder up to just past the first period-3 parameter.  Every odd
// period >= 3 makes all of its appearances inside this band.
inline const ScanConfig& family_scan_band(UnimodalFamily fam) {
  static const auto compute = [](UnimodalFamily f) -> ScanConfig {
    ScanConfig band;
    if (f == UnimodalFamily::logistic) {
      band.lambda_lo = 0.8925;
      band.lambda_hi = 0.9580;
      return band;
    }
    // Calibrate from the power ladder: its 8th and 16th rungs bracket the
    // accumulation point, and the lone period-3 parameter caps the band.
    ScanConfig wide;
    wide.lambda_lo = family_x_max(f) - 0.02;
    wide.lambda_hi = 0.996;
    auto powers = period_doubling_ladder(f, 1, 1, 4, wide);
    const double l8 = powers[3].lambda;
    const double l16 = powers[4].lambda;
    ScanConfig three;
    three.lambda_lo = l16;
    three.lambda_hi = 0.995;
    auto cubes = find_superstable(f, 3, three);
    if (cubes.empty())
      throw coverage_error(
          "band calibration found no period-3 parameter below 0.995");
    const double l3 = cubes.back().lambda;
    band.lambda_lo = l16 + 0.5 * (l16 - l8);
    band.lambda_hi = l3 + 0.02 * (l3 - l16);
    return band;
  };
  switch (fam) {
    case UnimodalFamily::logistic: {
      static const ScanConfig band = compute(UnimodalFamily::logistic);
      return band;
    }
    case UnimodalFamily::sine: {
      static const ScanConfig band = compute(UnimodalFamily::sine);
      return band;
    }
    case UnimodalFamily::cubic: {
      static const ScanConfig band = compute(UnimodalFamily::cubic);
      return band;
    }
    default: {
      static const ScanConfig band = compute(UnimodalFamily::quartic);
      return band;
    }
  }
}

// Band scan configuration for one period, with the default grid density.
inline ScanConfig default_scan_config(UnimodalFamily fam, int period) {
  ScanConfig cfg = family_scan_band(fam);
  cfg.grid_density = std::max(16384.0, 512.0 * static_cast<double>(period));
  return cfg;
}

// Base configuration for a period-doubling ladder: odd q starts from the
// appearance band; the q = 1 power ladder starts from the period-1 root at
// lambda = x_max instead, which lies far below the band.
inline ScanConfig default_ladder_config(UnimodalFamily fam, int q) {
  if (q == 1) {
    ScanConfig cfg;
    cfg.lambda_lo = family_x_max(fam) - 0.02;
    cfg.lambda_hi = family_scan_band(fam).lambda_hi;
    return cfg;
  }
  return default_scan_config(fam, q);
}

}  // namespace intervaldyn
