#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "cyclic_permutation.hpp"
#include "errors.hpp"
#include "sharkovskii.hpp"
#include "transition_digraph.hpp"

// Which least periods a covering digraph forces.
//
// A closed walk of length m witnesses least period m exactly when it is
// primitive, i.e. not a shorter closed walk traversed several times.  The
// number of primitive closed m-walks is the Moebius sum over divisors
//   a(m) = sum_{d | m} mu(m/d) * tr(A^d),
// where A is the adjacency matrix; a(m) > 0 iff a witness exists.  (Each
// closed m-walk has a unique primitive core whose length divides m.)
//
// The predicates below decide "no witness of any period stronger than r"
// even though infinitely many periods are stronger than r.  Closed walks
// stay inside one strongly connected component, and each component is
// either a single cycle (witnessing exactly its length) or has two or more
// cycles, in which case it witnesses every sufficiently large multiple of
// its period p (= gcd of its cycle lengths) plus finitely many small
// multiples of p.  Witnesses stronger than r therefore reduce to: a single
// cycle whose length is stronger than r; a multi-cycle component whose
// period has a strictly smaller two-power exponent than r (or any
// multi-cycle component at all when r is a power of two); or a small
// same-exponent multiple of p checked exactly.
//
// That large-multiple claim is constructive: a component with two cycles
// and vertices V' has a closed walk visiting some vertex exactly once
// (hence primitive) of some length c <= 2V'-2, and closed walks through a
// fixed vertex of every length p*k with k large; concatenating keeps the
// exactly-once vertex, so every large multiple of p is witnessed.

namespace intervaldyn {

namespace detail {

template <typename T>
std::vector<T> matrix_multiply(const std::vector<T>& x, const std::vector<T>& y,
                               int v) {
  std::vector<T> out(static_cast<size_t>(v) * v, T(0));
  for (int i = 0; i < v; ++i)
    for (int k = 0; k < v; ++k) {
      const T& xik = x[static_cast<size_t>(i) * v + k];
      if (xik == 0) continue;
      for (int j = 0; j < v; ++j)
        out[static_cast<size_t>(i) * v + j] +=
            xik * y[static_cast<size_t>(k) * v + j];
    }
  return out;
}

// tr(adj^d) for every divisor d of m, then the Moebius-weighted sum.
template <typename T>
bool primitive_walk_exists(const std::vector<std::uint8_t>& adj, int v,
                           std::uint64_t m) {
  std::vector<T> a(adj.size()), power;
  for (size_t i = 0; i < adj.size(); ++i) a[i] = T(adj[i]);
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d <= m; ++d)
    if (m % d == 0) divisors.push_back(d);
  std::vector<T> traces(divisors.size(), T(0));
  power = a;
  size_t next = 0;
  for (std::uint64_t k = 1; k <= m; ++k) {
    if (k > 1) power = matrix_multiply(power, a, v);
    if (next < divisors.size() && divisors[next] == k) {
      T tr(0);
      for (int i = 0; i < v; ++i) tr += power[static_cast<size_t>(i) * v + i];
      traces[next++] = tr;
    }
  }
  // mu(m/d): 0 unless m/d squarefree, else (-1)^{#prime factors}.
  auto moebius = [](std::uint64_t x) -> int {
    int sign = 1;
    for (std::uint64_t f = 2; f * f <= x; ++f) {
      if (x % f) continue;
      x /= f;
      if (x % f == 0) return 0;
      sign = -sign;
    }
    if (x > 1) sign = -sign;
    return sign;
  };
  T total(0);
  for (size_t i = 0; i < divisors.size(); ++i) {
    const int mu = moebius(m / divisors[i]);
    if (mu == 1)
      total += traces[i];
    else if (mu == -1)
      total -= traces[i];
  }
  return total > 0;
}

inline std::vector<std::uint8_t> adjacency(const TransitionDigraph& d) {
  const int v = d.vertices();
  std::vector<std::uint8_t> a(static_cast<size_t>(v) * v, 0);
  for (int i = 1; i <= v; ++i)
    for (int j = 1; j <= v; ++j)
      if (d.has_edge(i, j)) a[static_cast<size_t>(i - 1) * v + (j - 1)] = 1;
  return a;
}

inline bool primitive_walk_exists_any(const std::vector<std::uint8_t>& adj,
                                      int v, std::uint64_t m) {
  if (v == 0 || m == 0) return false;
  // Choose an integer type wide enough for tr(A^m) <= v^{m+1}.
  const double bits = (m + 1) * std::log2(std::max(v, 2));
  if (bits < 62) return primitive_walk_exists<std::int64_t>(adj, v, m);
  if (bits < 125) return primitive_walk_exists<__int128>(adj, v, m);
  return primitive_walk_exists<boost::multiprecision::cpp_int>(adj, v, m);
}

struct Component {
  std::vector<int> members;   // 0-based vertex ids
  std::uint64_t edge_count = 0;
  bool single_cycle = false;  // strongly connected with exactly one cycle
  std::uint64_t cycle_length = 0;  // when single_cycle
  std::uint64_t period = 0;        // gcd of cycle lengths (multi-cycle case)
};

// Strongly connected components (iterative Tarjan), keeping only components
// that contain at least one cycle (a single vertex counts only with a loop).
inline std::vector<Component> cyclic_components(
    const std::vector<std::uint8_t>& adj, int v) {
  std::vector<int> index(static_cast<size_t>(v), -1),
      low(static_cast<size_t>(v), 0);
  std::vector<bool> onstack(static_cast<size_t>(v), false);
  std::vector<int> stack;
  std::vector<Component> out;
  int counter = 0;

  struct Frame {
    int vertex;
    int next;  // next neighbor to try
  };
  for (int root = 0; root < v; ++root) {
    if (index[static_cast<size_t>(root)] != -1) continue;
    std::vector<Frame> call;
    call.push_back({root, 0});
    index[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = counter++;
    stack.push_back(root);
    onstack[static_cast<size_t>(root)] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      bool descended = false;
      while (f.next < v) {
        const int w = f.next++;
        if (!adj[static_cast<size_t>(f.vertex) * v + w]) continue;
        if (index[static_cast<size_t>(w)] == -1) {
          index[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = counter++;
          stack.push_back(w);
          onstack[static_cast<size_t>(w)] = true;
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (onstack[static_cast<size_t>(w)])
          low[static_cast<size_t>(f.vertex)] =
              std::min(low[static_cast<size_t>(f.vertex)],
                       index[static_cast<size_t>(w)]);
      }
      if (descended) continue;
      // finished f.vertex
      if (low[static_cast<size_t>(f.vertex)] ==
          index[static_cast<size_t>(f.vertex)]) {
        Component c;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          onstack[static_cast<size_t>(w)] = false;
          c.members.push_back(w);
        } while (w != f.vertex);
        out.push_back(std::move(c));
      }
      const int child = f.vertex;
      call.pop_back();
      if (!call.empty())
        low[static_cast<size_t>(call.back().vertex)] =
            std::min(low[static_cast<size_t>(call.back().vertex)],
                     low[static_cast<size_t>(child)]);
    }
  }

  std::vector<Component> cyclic;
  for (auto& c : out) {
    std::vector<int> pos(static_cast<size_t>(v), -1);
    for (size_t i = 0; i < c.members.size(); ++i)
      pos[static_cast<size_t>(c.members[i])] = static_cast<int>(i);
    const int n = static_cast<int>(c.members.size());
    for (int i : c.members)
      for (int j : c.members)
        if (adj[static_cast<size_t>(i) * v + j]) ++c.edge_count;
    if (n == 1 && c.edge_count == 0) continue;  // acyclic singleton
    if (c.edge_count == static_cast<std::uint64_t>(n)) {
      // strongly connected with E == V: a single cycle through all members
      c.single_cycle = true;
      c.cycle_length = static_cast<std::uint64_t>(n);
    } else {
      // gcd of cycle lengths via BFS levels: every edge u->w contributes
      // level(u) + 1 - level(w)
      std::vector<long long> level(static_cast<size_t>(v), -1);
      std::vector<int> queue{c.members.front()};
      level[static_cast<size_t>(c.members.front())] = 0;
      long long g = 0;
      for (size_t qi = 0; qi < queue.size(); ++qi) {
        const int u = queue[qi];
        for (int w : c.members) {
          if (!adj[static_cast<size_t>(u) * v + w]) continue;
          if (level[static_cast<size_t>(w)] == -1) {
            level[static_cast<size_t>(w)] = level[static_cast<size_t>(u)] + 1;
            queue.push_back(w);
          } else {
            g = std::gcd(g, std::abs(level[static_cast<size_t>(u)] + 1 -
                                     level[static_cast<size_t>(w)]));
          }
        }
      }
      c.period = static_cast<std::uint64_t>(g == 0 ? 1 : g);
    }
    cyclic.push_back(std::move(c));
  }
  return cyclic;
}

inline std::vector<std::uint8_t> submatrix(const std::vector<std::uint8_t>& adj,
                                           int v, const std::vector<int>& keep) {
  const int k = static_cast<int>(keep.size());
  std::vector<std::uint8_t> sub(static_cast<size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      sub[static_cast<size_t>(i) * k + j] =
          adj[static_cast<size_t>(keep[static_cast<size_t>(i)]) * v +
              keep[static_cast<size_t>(j)]];
  return sub;
}

// Does any component witness a least period strictly stronger than r?
inline bool stronger_witness_exists(const std::vector<std::uint8_t>& adj, int v,
                                    std::uint64_t r) {
  const PeriodDecomposition dr = decompose(r);
  for (const Component& c : cyclic_components(adj, v)) {
    if (c.single_cycle) {
      if (sharkovskii_less(r, c.cycle_length)) return true;
      continue;
    }
    // Multi-cycle component: witnesses all large multiples of its period.
    if (dr.odd_part == 1) return true;  // yields non-powers, stronger than 2^s
    const PeriodDecomposition dp = decompose(c.period);
    if (dp.exponent < dr.exponent) return true;
    if (dp.exponent > dr.exponent) continue;
    // Same two-power exponent: only small same-exponent multiples of the
    // period can be stronger (odd multiplier w, odd part below r's).
    const auto sub = submatrix(adj, v, c.members);
    const int sv = static_cast<int>(c.members.size());
    for (std::uint64_t w = 1; dp.odd_part * w < dr.odd_part; w += 2) {
      if (dp.odd_part * w < 3) continue;  // power of two, not stronger
      if (primitive_walk_exists_any(sub, sv, c.period * w)) return true;
    }
  }
  return false;
}

// Bitmask fast path used by the pattern enumerators (vertex count <= 16).
//
// For odd m, once every smaller odd length >= 3 has been refuted, a primitive
// closed m-walk exists iff some closed m-walk visits two distinct vertices:
// the walk's primitive core has length d | m with d >= 3 odd, and d < m is
// refuted, so d == m.  And if any odd primitive walk of length >= 3 exists at
// all, one exists of length <= 2*V + 1: a shortest closed walk through two
// distinct vertices splits at repeated vertices into at most two simple
// cycles whose lengths (each <= V) cannot both be even when the total is odd.
inline std::uint64_t smallest_odd_least_period(const std::uint16_t* rows, int v,
                                               std::uint64_t limit) {
  if (v <= 0) return 0;
  // reach[j][a] = set of vertices reachable from a in exactly j steps
  std::vector<std::vector<std::uint16_t>> reach;
  reach.emplace_back(static_cast<size_t>(v), 0);  // j = 0 unused
  reach.emplace_back(rows, rows + v);
  for (std::uint64_t m = 3; m <= limit; m += 2) {
    while (reach.size() < m) {
      const auto& prev = reach.back();
      std::vector<std::uint16_t> next(static_cast<size_t>(v), 0);
      for (int a = 0; a < v; ++a) {
        std::uint16_t mask = prev[static_cast<size_t>(a)];
        std::uint16_t acc = 0;
        while (mask) {
          const int b = std::countr_zero(mask);
          mask = static_cast<std::uint16_t>(mask & (mask - 1));
          acc = static_cast<std::uint16_t>(acc | rows[b]);
        }
        next[static_cast<size_t>(a)] = acc;
      }
      reach.push_back(std::move(next));
    }
    for (std::uint64_t j = 1; j < m; ++j)
      for (int a = 0; a < v; ++a) {
        std::uint16_t mask = static_cast<std::uint16_t>(
            reach[static_cast<size_t>(j)][static_cast<size_t>(a)] &
            ~static_cast<std::uint16_t>(1u << a));
        while (mask) {
          const int b = std::countr_zero(mask);
          mask = static_cast<std::uint16_t>(mask & (mask - 1));
          if (reach[static_cast<size_t>(m - j)][static_cast<size_t>(b)] &
              static_cast<std::uint16_t>(1u << a))
            return m;
        }
      }
  }
  return 0;
}

inline bool bit_least_period_six_absent(const std::uint16_t* rows, int v) {
  // Moebius count for length 6: tr(A) - tr(A^2) - tr(A^3) + tr(A^6) == 0.
  std::array<std::int64_t, 16 * 16> a{}, p{}, tmp{};
  for (int i = 0; i < v; ++i) {
    std::uint16_t mask = rows[i];
    while (mask) {
      const int j = std::countr_zero(mask);
      mask = static_cast<std::uint16_t>(mask & (mask - 1));
      a[static_cast<size_t>(i) * 16 + j] = 1;
    }
  }
  p = a;
  std::int64_t traces[7] = {0, 0, 0, 0, 0, 0, 0};
  for (int k = 1; k <= 6; ++k) {
    if (k > 1) {
      tmp.fill(0);
      for (int i = 0; i < v; ++i)
        for (int l = 0; l < v; ++l) {
          const std::int64_t pil = p[static_cast<size_t>(i) * 16 + l];
          if (!pil) continue;
          for (int j = 0; j < v; ++j)
            tmp[static_cast<size_t>(i) * 16 + j] +=
                pil * a[static_cast<size_t>(l) * 16 + j];
        }
      p = tmp;
    }
    for (int i = 0; i < v; ++i) traces[k] += p[static_cast<size_t>(i) * 16 + i];
  }
  return traces[1] - traces[2] - traces[3] + traces[6] == 0;
}

}  // namespace detail

// True iff some interval-map realization of the digraph has a point of least
// period m: a primitive closed m-walk exists.
inline bool has_least_period(const TransitionDigraph& d, std::uint64_t m) {
  if (m == 0) throw domain_error("has_least_period: period must be positive");
  return detail::primitive_walk_exists_any(detail::adjacency(d), d.vertices(), m);
}

// True iff the connect-the-dots map of p has a point of least period m.
//
// The marked orbit itself always realizes the pattern's own period, so
// m == n answers true outright.  That clause also covers the one degeneracy
// the walk count cannot see: an itinerary whose composition is the identity
// on a whole interval (possible only along slope +-1 pieces, which carry
// unit intervals onto unit intervals).  Such a flat is a full spanned
// interval, its marked endpoints force n | m, and the n-th iterate is
// already the identity there — so flats contribute least period exactly n
// and nothing else.  Every other period is decided by primitive walks.
inline bool has_least_period(const CyclicPermutation& p, std::uint64_t m) {
  if (m == 0) throw domain_error("has_least_period: period must be positive");
  if (m == static_cast<std::uint64_t>(p.size())) return true;
  // A lone fixed point spans no intervals, so its digraph is empty; no
  // period other than its own is realized.
  if (p.size() == 1) return false;
  return has_least_period(build_digraph(p), m);
}

// A pattern is minimal when it forces nothing stronger than its own period:
// every continuous map with an orbit of this pattern need only have the
// periods weaker than or equal to n.
inline bool is_minimal(const CyclicPermutation& p) {
  const std::uint64_t n = static_cast<std::uint64_t>(p.size());
  if (n == 1) return true;
  const TransitionDigraph d = build_digraph(p);
  return !detail::stronger_witness_exists(detail::adjacency(d), d.vertices(), n);
}

// A pattern is second-minimal when it forces exactly the periods weaker than
// or equal to the immediate upgrade u of its period n (so it forces u but
// nothing stronger).  Defined for odd n >= 7 and for n whose period has an
// immediate upgrade; elsewhere the notion is empty.
inline bool is_second_minimal(const CyclicPermutation& p) {
  const std::uint64_t n = static_cast<std::uint64_t>(p.size());
  if (n % 2 == 1 && n < 7)
    throw domain_error("is_second_minimal: defined for odd periods >= 7");
  const auto u = descending_predecessor(n);
  if (!u)
    throw domain_error(
        "is_second_minimal: period has no immediate stronger neighbor");
  const TransitionDigraph d = build_digraph(p);
  const auto adj = detail::adjacency(d);
  return detail::primitive_walk_exists_any(adj, d.vertices(), *u) &&
         !detail::stronger_witness_exists(adj, d.vertices(), *u);
}

}  // namespace intervaldyn
