#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <vector>

#include "cyclic_permutation.hpp"
#include "errors.hpp"

namespace intervaldyn {

using rational = boost::multiprecision::cpp_rational;

// Continuous map of [1, n] that is affine on each gap [i, i+1]; the
// "connect-the-dots" realization of an orbit pattern sends i to pattern(i)
// and interpolates linearly in between.  All arithmetic is exact.
class PiecewiseLinearMap {
 public:
  struct Piece {
    rational lo, hi;  // domain [lo, hi], lo < hi
    rational a, b;    // x -> a*x + b on the piece
  };

  // Pieces must tile [lo_0, hi_last] contiguously.
  explicit PiecewiseLinearMap(std::vector<Piece> pieces)
      : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw domain_error("PiecewiseLinearMap: no pieces");
    for (size_t k = 0; k < pieces_.size(); ++k) {
      if (!(pieces_[k].lo < pieces_[k].hi))
        throw domain_error("PiecewiseLinearMap: empty piece");
      if (k && pieces_[k - 1].hi != pieces_[k].lo)
        throw domain_error("PiecewiseLinearMap: pieces not contiguous");
    }
  }

  static PiecewiseLinearMap from_pattern(const CyclicPermutation& p) {
    const int n = p.size();
    if (n == 1)
      return PiecewiseLinearMap({{rational(1), rational(2), rational(0), rational(1)}});
    std::vector<Piece> ps;
    ps.reserve(static_cast<size_t>(n) - 1);
    for (int i = 1; i < n; ++i) {
      const rational a = p(i + 1) - p(i);
      const rational b = rational(p(i)) - a * i;
      ps.push_back({rational(i), rational(i + 1), a, b});
    }
    return PiecewiseLinearMap(std::move(ps));
  }

  rational domain_lo() const { return pieces_.front().lo; }
  rational domain_hi() const { return pieces_.back().hi; }
  const std::vector<Piece>& pieces() const { return pieces_; }

  const Piece& piece_at(const rational& x) const {
    if (x < domain_lo() || x > domain_hi())
      throw domain_error("PiecewiseLinearMap: point outside domain");
    // Binary search for the piece whose closed interval contains x
    // (boundary points fall to the left piece, except the left edge).
    size_t lo = 0, hi = pieces_.size() - 1;
    while (lo < hi) {
      const size_t mid = (lo + hi) / 2;
      if (x <= pieces_[mid].hi)
        hi = mid;
      else
        lo = mid + 1;
    }
    return pieces_[lo];
  }

  rational operator()(const rational& x) const {
    const Piece& p = piece_at(x);
    return p.a * x + p.b;
  }

 private:
  std::vector<Piece> pieces_;
};

// Exact evaluation of the pattern's interpolation map.
inline rational lmap_eval(const PiecewiseLinearMap& m, const rational& x) {
  return m(x);
}

inline rational lmap_eval(const CyclicPermutation& p, const rational& x) {
  return PiecewiseLinearMap::from_pattern(p)(x);
}

}  // namespace intervaldyn
