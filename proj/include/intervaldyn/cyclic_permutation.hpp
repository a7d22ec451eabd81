#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "errors.hpp"

namespace intervaldyn {

// A permutation of {1..n} consisting of a single n-cycle, used as the
// order pattern of a periodic orbit: entry i is the rank of the image of
// the i-th smallest orbit point.  n = 1 (the identity on one point) is
// allowed as the pattern of a fixed point; for n >= 2 a single n-cycle
// never fixes a point.
class CyclicPermutation {
 public:
  explicit CyclicPermutation(std::vector<int> image) : image_(std::move(image)) {
    validate();
  }

  int size() const { return static_cast<int>(image_.size()); }

  // 1-based application.
  int operator()(int i) const {
    if (i < 1 || i > size())
      throw domain_error("CyclicPermutation: index out of range");
    return image_[static_cast<size_t>(i) - 1];
  }

  const std::vector<int>& image() const { return image_; }

  // Conjugation by the order-reversing involution of {1..n}: the pattern of
  // the same orbit traversed through the flipped interval.  An orbit class
  // is the pair {pattern, inverse pattern}.
  CyclicPermutation inverse() const {
    const int n = size();
    std::vector<int> inv(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i)
      inv[static_cast<size_t>(i) - 1] = n + 1 - image_[static_cast<size_t>(n - i)];
    return CyclicPermutation(std::move(inv));
  }

  std::string to_string() const {
    std::string s = "(";
    for (int i = 0; i < size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(image_[static_cast<size_t>(i)]);
    }
    s += ')';
    return s;
  }

  friend bool operator==(const CyclicPermutation&,
                         const CyclicPermutation&) = default;
  friend auto operator<=>(const CyclicPermutation& a,
                          const CyclicPermutation& b) {
    return a.image_ <=> b.image_;
  }

 private:
  void validate() const {
    const int n = size();
    if (n < 1) throw domain_error("CyclicPermutation: empty image");
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int v : image_) {
      if (v < 1 || v > n)
        throw domain_error("CyclicPermutation: entry out of range");
      if (seen[static_cast<size_t>(v)])
        throw domain_error("CyclicPermutation: repeated entry");
      seen[static_cast<size_t>(v)] = true;
    }
    // single n-cycle
    int at = 1, steps = 0;
    do {
      at = image_[static_cast<size_t>(at) - 1];
      ++steps;
    } while (at != 1 && steps <= n);
    if (steps != n)
      throw domain_error("CyclicPermutation: image is not a single cycle");
  }

  std::vector<int> image_;
};

// The lexicographically smaller of a pattern and its inverse: the canonical
// representative of the orbit class.
inline CyclicPermutation canonical_representative(const CyclicPermutation& p) {
  CyclicPermutation q = p.inverse();
  return q.image() < p.image() ? q : p;
}

}  // namespace intervaldyn
