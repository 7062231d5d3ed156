#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ccbraid/permutation.hpp"

namespace ccb {

/// A word in the Artin generators of B_n.
///
/// Letters are signed generator indices: k > 0 stands for sigma_k and k < 0
/// for sigma_{|k|}^{-1}, with 1 <= |k| <= n - 1. Words are plain values; no
/// operation reduces them implicitly.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<int> letters = {});

  static BraidWord identity(int strands) { return BraidWord(strands); }

  int strands() const noexcept { return strands_; }
  std::span<const int> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

/// Whitespace-separated nonzero integers, e.g. "1 -2 1".
BraidWord parse_word(std::string_view text, int strands);
std::string format_word(const BraidWord& w);

BraidWord concat(const BraidWord& u, const BraidWord& v);
BraidWord concat(std::span<const BraidWord> words);
BraidWord inverse(const BraidWord& w);
BraidWord power(const BraidWord& w, int exponent);
BraidWord free_reduce(const BraidWord& w);

// Named word families. All indices are 1-based strand positions.

/// sigma_{j-1} ... sigma_i; the empty word when i == j.
BraidWord a_word(int i, int j, int n);
/// sigma_{j-1}..sigma_{i+1} sigma_i^2 sigma_{i+1}^{-1}..sigma_{j-1}^{-1}: strands i and j link once.
BraidWord s_word(int i, int j, int n);
/// a_{k,l} a_{k+1,l}^{-1}: exchanges the strands at positions k and l.
BraidWord e_word(int k, int l, int n);

/// r(n): the last lower index k of the exchanges e_{k, n+2-k} making up the reflection b.
int reflection_last(int n);
/// s(n) = n + 2 - r(n).
inline int reflection_partner(int n) { return n + 2 - reflection_last(n); }

/// Lift of the rotation (1 2 ... n): a_{1,n}.
BraidWord psi_a_word(int n);
/// Lift of the reflection b = (2 n)(3 n-1)...: e_{2,n} e_{3,n-1} ... e_{r(n),s(n)}.
BraidWord psi_b_word(int n);

/// Maps strand start position to end position, reading letters left to right.
Permutation perm_of(const BraidWord& w);

/// Signed crossing counts between strands, labelled by their starting position.
class CrossingMatrix {
 public:
  explicit CrossingMatrix(int n);

  int size() const noexcept { return n_; }
  std::int64_t at(int p, int q) const {
    return data_[static_cast<std::size_t>((p - 1) * n_ + (q - 1))];
  }
  /// Adds to both (p,q) and (q,p).
  void add(int p, int q, std::int64_t delta);

  /// Entry (p, q) of the result is entry (relabel(p), relabel(q)) of this one.
  CrossingMatrix pulled_back(const Permutation& relabel) const;

  friend CrossingMatrix operator+(CrossingMatrix lhs, const CrossingMatrix& rhs);
  friend bool operator==(const CrossingMatrix&, const CrossingMatrix&) = default;

 private:
  int n_;
  std::vector<std::int64_t> data_;
};

CrossingMatrix crossing_matrix(const BraidWord& w);

}  // namespace ccb
