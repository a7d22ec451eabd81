#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "catalog.hpp"
#include "cyclic_permutation.hpp"
#include "errors.hpp"
#include "forced_periods.hpp"
#include "transition_digraph.hpp"

// Exhaustive classification of the patterns of a given period that are
// minimal (force nothing stronger than their own period) or second-minimal
// (force exactly the immediate upgrade of their period), merged into
// inverse pairs with deterministic canonical representatives.

namespace intervaldyn {

enum class PatternPredicate { minimal, second_minimal };

struct OrbitClass {
  CyclicPermutation representative;          // lexicographic min of the pair
  CyclicPermutation inverse_representative;  // its inverse
  std::optional<int> type_index;  // catalog index for period-7 second-minimal
  std::string shape;              // monotonicity signature of representative
};

namespace detail {

// Depth-first search over cycle orders c[0]=1, c[1], ..., c[n-1] (so the
// pattern maps c[t] to c[t+1]).  Digraph edges materialize as soon as both
// endpoint images of a unit interval are fixed; any branch whose partial
// digraph already carries a primitive closed 3-walk is cut, since every
// target pattern of period above 3 must avoid forcing period 3.  Period 3
// itself necessarily carries such a walk, so the cut is skipped there.
class PatternSearch {
 public:
  PatternSearch(int n, PatternPredicate pred)
      : n_(n),
        v_(n - 1),
        pred_(pred),
        image_(static_cast<size_t>(n) + 1, 0),
        used_(static_cast<size_t>(n) + 1, false),
        cycle_(static_cast<size_t>(n) + 1, 0) {}

  // Explore the subtree with c[1] = first, collecting canonical images.
  void run(int first, std::set<std::vector<int>>& out) {
    out_ = &out;
    cycle_[0] = 1;
    used_[1] = true;
    cycle_[1] = first;
    used_[static_cast<size_t>(first)] = true;
    image_[1] = first;
    rows_.assign(static_cast<size_t>(v_), 0);
    done_.assign(static_cast<size_t>(v_) + 1, false);
    if (materialize(1)) extend(2);
    retract(1);
    used_[static_cast<size_t>(first)] = false;
    used_[1] = false;
  }

 private:
  // Fix edges of unit intervals whose endpoint images both exist after
  // image_[pos] was set; false when a primitive 3-walk appears.
  bool materialize(int pos) {
    bool ok = true;
    for (int w : {pos - 1, pos}) {
      if (w < 1 || w > v_) continue;
      if (!image_[static_cast<size_t>(w)] || !image_[static_cast<size_t>(w) + 1])
        continue;
      const int a = std::min(image_[static_cast<size_t>(w)],
                             image_[static_cast<size_t>(w) + 1]);
      const int b = std::max(image_[static_cast<size_t>(w)],
                             image_[static_cast<size_t>(w) + 1]);
      // vertices a .. b-1 (1-based), bits a-1 .. b-2
      rows_[static_cast<size_t>(w - 1)] = static_cast<std::uint16_t>(
          ((1u << (b - 1)) - 1u) & ~((1u << (a - 1)) - 1u));
      done_[static_cast<size_t>(w)] = true;
      if (ok && n_ > 3 && closes_triangle(w - 1)) ok = false;
    }
    return ok;
  }

  void retract(int pos) {
    for (int w = std::max(1, pos - 1); w <= std::min(v_, pos); ++w) {
      const bool determined = image_[static_cast<size_t>(w)] != 0 &&
                              image_[static_cast<size_t>(w) + 1] != 0;
      if (!determined && done_[static_cast<size_t>(w)]) {
        done_[static_cast<size_t>(w)] = false;
        rows_[static_cast<size_t>(w - 1)] = 0;
      }
    }
  }

  // A primitive closed 3-walk through vertex `a0` (0-based)?  The previous
  // graph was 3-walk-free, so only walks through a new vertex can appear.
  bool closes_triangle(int a0) const {
    std::uint16_t bs = rows_[static_cast<size_t>(a0)];
    while (bs) {
      const int b = std::countr_zero(bs);
      bs = static_cast<std::uint16_t>(bs & (bs - 1));
      std::uint16_t cs = rows_[static_cast<size_t>(b)];
      while (cs) {
        const int c = std::countr_zero(cs);
        cs = static_cast<std::uint16_t>(cs & (cs - 1));
        if ((rows_[static_cast<size_t>(c)] >> a0) & 1u)
          if (!(a0 == b && b == c)) return true;
      }
    }
    return false;
  }

  void extend(int depth) {
    if (depth == n_) {
      // close the cycle: pattern maps c[n-1] back to 1
      const int pos = cycle_[static_cast<size_t>(n_ - 1)];
      image_[static_cast<size_t>(pos)] = 1;
      if (materialize(pos) && accept()) record();
      image_[static_cast<size_t>(pos)] = 0;
      retract(pos);
      return;
    }
    const int pos = cycle_[static_cast<size_t>(depth - 1)];
    for (int value = 2; value <= n_; ++value) {
      if (used_[static_cast<size_t>(value)]) continue;
      cycle_[static_cast<size_t>(depth)] = value;
      used_[static_cast<size_t>(value)] = true;
      image_[static_cast<size_t>(pos)] = value;
      if (materialize(pos)) extend(depth + 1);
      image_[static_cast<size_t>(pos)] = 0;
      retract(pos);
      used_[static_cast<size_t>(value)] = false;
    }
  }

  bool accept() const {
    if (pred_ == PatternPredicate::minimal) {
      if (n_ % 2 == 1)
        return detail::smallest_odd_least_period(
                   rows_.data(), v_, static_cast<std::uint64_t>(n_) - 2) == 0;
      if (n_ == 10)
        return detail::smallest_odd_least_period(rows_.data(), v_, 19) == 0 &&
               detail::bit_least_period_six_absent(rows_.data(), v_);
      return is_minimal(current_permutation());
    }
    if (n_ % 2 == 1)
      return detail::smallest_odd_least_period(
                 rows_.data(), v_, static_cast<std::uint64_t>(n_) - 2) ==
             static_cast<std::uint64_t>(n_) - 2;
    return is_second_minimal(current_permutation());
  }

  CyclicPermutation current_permutation() const {
    return CyclicPermutation(
        std::vector<int>(image_.begin() + 1, image_.end()));
  }

  void record() {
    std::vector<int> img(image_.begin() + 1, image_.end());
    std::vector<int> mirror(static_cast<size_t>(n_));
    for (int i = 1; i <= n_; ++i)
      mirror[static_cast<size_t>(i - 1)] =
          n_ + 1 - img[static_cast<size_t>(n_ - i)];
    out_->insert(std::min(img, mirror));
  }

  int n_, v_;
  PatternPredicate pred_;
  std::vector<int> image_, cycle_;
  std::vector<bool> used_;
  std::vector<std::uint16_t> rows_;
  std::vector<bool> done_;
  std::set<std::vector<int>>* out_ = nullptr;
};

}  // namespace detail

// All classes of period n satisfying the predicate, sorted by representative.
// Partitions of the search space (by the first cycle step) run independently
// and merge deterministically, so results do not depend on thread count.
inline std::vector<OrbitClass> enumerate_classes(int n,
                                                 PatternPredicate predicate) {
  if (n < 1) throw domain_error("enumerate_classes: period must be positive");
  if (n > 13)
    throw resource_error(
        "enumerate_classes: periods beyond 13 exceed the enumeration budget");
  if (predicate == PatternPredicate::second_minimal) {
    if (n % 2 == 1 && n < 7)
      throw domain_error(
          "enumerate_classes: second-minimal patterns need odd period >= 7");
    if (!descending_predecessor(static_cast<std::uint64_t>(n)))
      throw domain_error(
          "enumerate_classes: period has no immediate stronger neighbor");
  }

  std::set<std::vector<int>> canon;
  if (n == 1) {
    canon.insert({1});
  } else {
    std::vector<int> firsts;
    for (int first = 2; first <= n; ++first) firsts.push_back(first);
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (hw <= 1 || firsts.size() <= 1) {
      for (int first : firsts) {
        detail::PatternSearch search(n, predicate);
        search.run(first, canon);
      }
    } else {
      std::vector<std::set<std::vector<int>>> parts(firsts.size());
      std::vector<std::thread> pool;
      std::atomic<size_t> next{0};
      const unsigned workers =
          std::min<unsigned>(hw, static_cast<unsigned>(firsts.size()));
      for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&, n, predicate] {
          for (size_t i = next.fetch_add(1); i < firsts.size();
               i = next.fetch_add(1)) {
            detail::PatternSearch search(n, predicate);
            search.run(firsts[i], parts[i]);
          }
        });
      for (auto& th : pool) th.join();
      for (auto& part : parts) canon.merge(part);
    }
  }

  std::vector<OrbitClass> out;
  for (const auto& img : canon) {
    CyclicPermutation rep(img);
    OrbitClass cls{rep, rep.inverse(), std::nullopt, shape_signature(rep)};
    if (n == 7 && predicate == PatternPredicate::second_minimal)
      cls.type_index = match_catalog(rep);
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(),
            [](const OrbitClass& a, const OrbitClass& b) {
              return a.representative.image() < b.representative.image();
            });
  return out;
}

// Number of digraph types (edge sets up to the mirror relabeling) among the
// minimal patterns of double-odd period 2(2k+1).
inline int count_minimal_double_odd_types(int k) {
  if (k < 1)
    throw domain_error("count_minimal_double_odd_types: k must be positive");
  if (k > 2)
    throw resource_error(
        "count_minimal_double_odd_types: k beyond 2 exceeds the enumeration "
        "budget");
  const int n = 2 * (2 * k + 1);
  std::set<std::string> keys;
  for (const OrbitClass& cls :
       enumerate_classes(n, PatternPredicate::minimal)) {
    const TransitionDigraph d = build_digraph(cls.representative);
    keys.insert(std::min(d.serialize(), d.mirrored().serialize()));
  }
  return static_cast<int>(keys.size());
}

}  // namespace intervaldyn
