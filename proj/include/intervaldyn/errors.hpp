#pragma once

#include <stdexcept>
#include <string>

namespace intervaldyn {

// An argument lies outside a function's documented domain.
class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A request exceeds the supported problem size.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A sequence that must be strictly monotone is not.
class ordering_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Geometric extrapolation was requested with a contraction ratio <= 1.
class divergent_extrapolation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A map does not satisfy the rescaling inequalities required by the
// doubling construction; the message names the failed inequality.
class not_renormalizable_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter ladder with a repeated value: gap ratios are undefined.
class degenerate_ladder_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A requested quantity sits below the binary64 noise floor.
class precision_floor_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scan records do not cover the region a verification walk needs.
class coverage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numeric orbit points too close together to define a permutation.
class degeneracy_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace intervaldyn
