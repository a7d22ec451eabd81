#pragma once

#include <intervaldyn/cyclic_permutation.hpp>
#include <intervaldyn/transition_digraph.hpp>

#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

// Independent reference for forced least periods (test support only).
//
// The pattern is realized as the piecewise-linear map joining consecutive
// orbit points.  The marked orbit is itself an exact orbit of that map with
// least period n, so m == n is answered true directly.  For every other m
// the isolated periodic points of the m-th iterate are found by walking
// every closed itinerary of length m through the unit intervals: along a
// fixed itinerary the iterate is affine with integer coefficients, so its
// fixed point is an exact small rational.  Itineraries on which the iterate
// is the identity contribute whole intervals of periodic points; those flats
// are full spanned intervals whose marked endpoints pin their points to
// least period n (already reported above), so candidates inside or at the
// ends of such intervals are discarded.  A surviving fixed point witnesses
// least period m exactly when its first return time under the map is m.

namespace intervaldyn_test {

struct Fraction {
  long long num = 0;
  long long den = 1;  // always > 0, normalized
};

inline Fraction make_fraction(long long num, long long den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

inline int fraction_compare(const Fraction& x, const Fraction& y) {
  const __int128 lhs = static_cast<__int128>(x.num) * y.den;
  const __int128 rhs = static_cast<__int128>(y.num) * x.den;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

class LmapOracle {
 public:
  explicit LmapOracle(const intervaldyn::CyclicPermutation& p)
      : n_(p.size()) {
    for (int i = 1; i < n_; ++i) {
      const long long a = p(i + 1) - p(i);
      slope_.push_back(a);
      offset_.push_back(p(i) - a * i);
    }
    const auto d = intervaldyn::build_digraph(p);
    rows_.assign(static_cast<size_t>(d.vertices()), 0);
    for (int i = 1; i <= d.vertices(); ++i)
      for (int j = 1; j <= d.vertices(); ++j)
        if (d.has_edge(i, j))
          rows_[static_cast<size_t>(i - 1)] |=
              static_cast<std::uint16_t>(1u << (j - 1));
  }

  bool has_least_period(std::uint64_t m) const {
    if (m == 0) return false;
    if (m == static_cast<std::uint64_t>(n_)) return true;
    if (n_ == 1) return false;
    const int v = n_ - 1;

    // reach[j][a]: vertices reachable from a in exactly j steps
    std::vector<std::vector<std::uint16_t>> reach(m + 1);
    reach[0].assign(static_cast<size_t>(v), 0);
    for (int a = 0; a < v; ++a)
      reach[0][static_cast<size_t>(a)] = static_cast<std::uint16_t>(1u << a);
    for (std::uint64_t j = 1; j <= m; ++j) {
      reach[j].assign(static_cast<size_t>(v), 0);
      for (int a = 0; a < v; ++a) {
        std::uint16_t mask = reach[j - 1][static_cast<size_t>(a)];
        while (mask) {
          const int b = std::countr_zero(mask);
          mask = static_cast<std::uint16_t>(mask & (mask - 1));
          reach[j][static_cast<size_t>(a)] |= rows_[static_cast<size_t>(b)];
        }
      }
    }

    struct Flat {
      Fraction lo, hi;
    };
    std::vector<Flat> flats;
    std::set<std::pair<long long, long long>> candidates;

    std::vector<int> path;
    // Walk state along the path: composed map A*x + B and the exact domain.
    struct State {
      long long a, b;
      Fraction lo, hi;
    };
    std::vector<State> states;

    for (int start = 0; start < v; ++start) {
      path.assign(1, start);
      states.assign(
          1, State{1, 0, make_fraction(start + 1, 1), make_fraction(start + 2, 1)});
      // Depth-first over itineraries that can still close at `start`.
      std::vector<std::uint16_t> iter(m + 1, 0);
      iter[1] = rows_[static_cast<size_t>(start)];
      std::uint64_t depth = 1;
      while (depth >= 1) {
        if (depth > m) {
          // complete closed itinerary
          const State& s = states.back();
          if (s.a == 1 && s.b == 0) {
            flats.push_back({s.lo, s.hi});
          } else if (s.a != 1) {
            const Fraction fixed = make_fraction(s.b, 1 - s.a);
            if (fraction_compare(s.lo, fixed) <= 0 &&
                fraction_compare(fixed, s.hi) <= 0)
              candidates.insert({fixed.num, fixed.den});
          }
          --depth;
          path.pop_back();
          states.pop_back();
          continue;
        }
        std::uint16_t& mask = iter[depth];
        int next = -1;
        while (mask) {
          const int w = std::countr_zero(mask);
          mask = static_cast<std::uint16_t>(mask & (mask - 1));
          const bool closes =
              depth == m
                  ? w == start
                  : (reach[m - depth][static_cast<size_t>(w)] &
                     static_cast<std::uint16_t>(1u << start)) != 0;
          if (closes) {
            next = w;
            break;
          }
        }
        if (next == -1) {
          --depth;
          if (!path.empty()) {
            path.pop_back();
            states.pop_back();
          }
          continue;
        }
        // extend: apply piece of current vertex, then constrain into next
        const State& cur = states.back();
        const int piece = path.back();  // 0-based: interval [piece+1, piece+2]
        const long long na = slope_[static_cast<size_t>(piece)] * cur.a;
        const long long nb =
            slope_[static_cast<size_t>(piece)] * cur.b +
            offset_[static_cast<size_t>(piece)];
        // x must satisfy na*x + nb in [next+1, next+2]
        Fraction c1 = make_fraction(next + 1 - nb, na);
        Fraction c2 = make_fraction(next + 2 - nb, na);
        if (fraction_compare(c2, c1) < 0) std::swap(c1, c2);
        Fraction lo = fraction_compare(cur.lo, c1) >= 0 ? cur.lo : c1;
        Fraction hi = fraction_compare(cur.hi, c2) <= 0 ? cur.hi : c2;
        path.push_back(next);
        states.push_back({na, nb, lo, hi});
        ++depth;
        if (depth <= m) iter[depth] = rows_[static_cast<size_t>(next)];
      }
    }

    for (const auto& [num, den] : candidates) {
      const Fraction x{num, den};
      bool in_flat = false;
      for (const auto& f : flats)
        if (fraction_compare(f.lo, x) <= 0 && fraction_compare(x, f.hi) <= 0) {
          in_flat = true;
          break;
        }
      if (in_flat) continue;
      if (first_return(x) == m) return true;
    }
    return false;
  }

 private:
  std::uint64_t first_return(Fraction x) const {
    const Fraction x0 = x;
    for (std::uint64_t k = 1;; ++k) {
      x = apply(x);
      if (fraction_compare(x, x0) == 0) return k;
      if (k > 64) return 0;  // unreachable for genuine periodic candidates
    }
  }

  // Piece selection matches the map realization: a boundary point belongs to
  // the piece on its left.
  Fraction apply(const Fraction& x) const {
    long long idx = x.num / x.den;  // floor for positive values
    if (x.num % x.den == 0 && idx > 1) --idx;
    if (idx < 1) idx = 1;
    if (idx > n_ - 1) idx = n_ - 1;
    const long long a = slope_[static_cast<size_t>(idx - 1)];
    const long long b = offset_[static_cast<size_t>(idx - 1)];
    return make_fraction(a * x.num + b * x.den, x.den);
  }

  int n_;
  std::vector<long long> slope_, offset_;
  std::vector<std::uint16_t> rows_;
};

inline bool oracle_has_least_period(const intervaldyn::CyclicPermutation& p,
                                    std::uint64_t m) {
  return LmapOracle(p).has_least_period(m);
}

}  // namespace intervaldyn_test
