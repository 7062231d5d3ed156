#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace ccb {

/// A bijection of {1..n} stored in one-line notation.
///
/// Products read left to right: `compose(p, q)` first applies `p`, then `q`,
/// so `compose(p, q)(i) == q(p(i))`. This is the order in which braid words
/// are read, which makes `perm_of` a monoid homomorphism.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);
  /// The cycle i_1 -> i_2 -> ... -> i_k -> i_1.
  static Permutation cycle(int n, std::span<const int> points);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const noexcept { return image_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// "[2,3,1]"
  std::string to_string() const;
  /// "(1 2 3)(4 5)", "()" for the identity.
  std::string cycle_notation() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

Permutation compose(const Permutation& first, const Permutation& then);

inline Permutation operator*(const Permutation& first, const Permutation& then) {
  return compose(first, then);
}

}  // namespace ccb
