#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "errors.hpp"

// The four one-parameter unimodal families on [0,1] used by the numeric
// experiments.  Every member maps [0,1] into itself for lambda in [0,1],
// vanishes at both endpoints, and attains its maximum value lambda at the
// critical point x_max.

namespace intervaldyn {

enum class UnimodalFamily { logistic, sine, cubic, quartic };

inline const char* family_name(UnimodalFamily fam) {
  switch (fam) {
    case UnimodalFamily::logistic: return "logistic";
    case UnimodalFamily::sine: return "sine";
    case UnimodalFamily::cubic: return "cubic";
    case UnimodalFamily::quartic: return "quartic";
  }
  return "unknown";
}

inline std::optional<UnimodalFamily> parse_family(const std::string& name) {
  if (name == "logistic") return UnimodalFamily::logistic;
  if (name == "sine") return UnimodalFamily::sine;
  if (name == "cubic") return UnimodalFamily::cubic;
  if (name == "quartic") return UnimodalFamily::quartic;
  return std::nullopt;
}

inline double family_x_max(UnimodalFamily fam) {
  switch (fam) {
    case UnimodalFamily::logistic:
    case UnimodalFamily::sine:
    case UnimodalFamily::quartic:
      return 0.5;
    case UnimodalFamily::cubic:
      return 0.5773502691896257645;  // 1/sqrt(3)
  }
  return 0.5;
}

inline double family_eval(UnimodalFamily fam, double lambda, double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw domain_error("family_eval: x must lie in [0,1]");
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw domain_error("family_eval: lambda must lie in [0,1]");
  switch (fam) {
    case UnimodalFamily::logistic:
      return 4.0 * lambda * x * (1.0 - x);
    case UnimodalFamily::sine:
      return lambda * std::sin(std::numbers::pi * x);
    case UnimodalFamily::cubic:
      // peak value lambda at x = 1/sqrt(3): (3*sqrt(3)/2)*x*(1-x^2)
      return 2.5980762113533159403 * lambda * x * (1.0 - x * x);
    case UnimodalFamily::quartic: {
      const double u = 2.0 * x - 1.0;
      return lambda - lambda * (u * u * u * u);
    }
  }
  return 0.0;
}

// k-fold iteration from x (no per-step domain checks: the families are
// self-maps of [0,1] for lambda in [0,1], up to rounding, which is clamped).
inline double family_iterate(UnimodalFamily fam, double lambda, double x,
                             long long k) {
  if (k < 0) throw domain_error("family_iterate: count must be nonnegative");
  double y = x;
  for (long long i = 0; i < k; ++i) {
    y = family_eval(fam, lambda, y);
    if (y < 0.0) y = 0.0;
    if (y > 1.0) y = 1.0;
  }
  return y;
}

}  // namespace intervaldyn
