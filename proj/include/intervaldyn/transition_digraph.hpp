#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "cyclic_permutation.hpp"
#include "errors.hpp"

namespace intervaldyn {

// Covering digraph of an orbit pattern on n points: one vertex per gap
// J_i = [i, i+1] (i = 1..n-1), with an edge J_i -> J_s whenever the interval
// spanned by the images of i and i+1 contains J_s.  An edge is marked "red"
// when the spanned interval equals J_s exactly (the gap maps onto the target
// with no overshoot).
class TransitionDigraph {
 public:
  explicit TransitionDigraph(int vertices)
      : v_(vertices),
        edge_(static_cast<size_t>(vertices),
              std::vector<bool>(static_cast<size_t>(vertices), false)),
        red_(static_cast<size_t>(vertices),
             std::vector<bool>(static_cast<size_t>(vertices), false)) {
    if (vertices < 0) throw domain_error("TransitionDigraph: negative size");
  }

  int vertices() const { return v_; }

  // 1-based vertex labels.
  bool has_edge(int i, int j) const { return edge_[idx(i)][idx(j)]; }
  bool is_red(int i, int j) const { return red_[idx(i)][idx(j)]; }

  void add_edge(int i, int j, bool red = false) {
    edge_[idx(i)][idx(j)] = true;
    if (red) red_[idx(i)][idx(j)] = true;
  }

  // All edges as (from, to) pairs, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= v_; ++i)
      for (int j = 1; j <= v_; ++j)
        if (has_edge(i, j)) out.emplace_back(i, j);
    return out;
  }

  std::vector<std::pair<int, int>> red_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= v_; ++i)
      for (int j = 1; j <= v_; ++j)
        if (is_red(i, j)) out.emplace_back(i, j);
    return out;
  }

  // Relabeling J_i -> J_{v+1-i}: the digraph of the inverse pattern.
  TransitionDigraph mirrored() const {
    TransitionDigraph m(v_);
    for (int i = 1; i <= v_; ++i)
      for (int j = 1; j <= v_; ++j)
        if (has_edge(i, j))
          m.add_edge(v_ + 1 - i, v_ + 1 - j, is_red(i, j));
    return m;
  }

  std::string serialize() const {
    std::string s;
    for (auto [i, j] : edges()) {
      s += std::to_string(i);
      s += is_red(i, j) ? 'R' : '>';
      s += std::to_string(j);
      s += ';';
    }
    return s;
  }

  friend bool operator==(const TransitionDigraph&,
                         const TransitionDigraph&) = default;

 private:
  size_t idx(int i) const {
    if (i < 1 || i > v_) throw domain_error("TransitionDigraph: bad vertex");
    return static_cast<size_t>(i) - 1;
  }

  int v_;
  std::vector<std::vector<bool>> edge_;
  std::vector<std::vector<bool>> red_;
};

inline TransitionDigraph build_digraph(const CyclicPermutation& p) {
  const int n = p.size();
  TransitionDigraph d(n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    const int a = std::min(p(i), p(i + 1));
    const int b = std::max(p(i), p(i + 1));
    for (int s = a; s < b; ++s)
      d.add_edge(i, s, /*red=*/(b - a == 1));
  }
  return d;
}

}  // namespace intervaldyn
