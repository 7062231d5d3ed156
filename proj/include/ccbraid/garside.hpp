#pragma once

#include <string>
#include <vector>

#include "ccbraid/braid_word.hpp"
#include "ccbraid/permutation.hpp"

namespace ccb {

/// Left-weighted normal form Delta^infimum * A_1 * ... * A_k of a braid.
///
/// Each factor is a permutation braid (a positive braid in which every pair of
/// strands crosses at most once), identified with its permutation under the
/// `perm_of` convention. Factors are never the identity or the half twist.
struct NormalForm {
  int strands = 1;
  int infimum = 0;
  std::vector<Permutation> factors;

  /// Whitespace-free rendering, e.g. "D^1" or "D^-1*[2,1,3]*[1,3,2]".
  std::string to_string() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

Permutation half_twist(int n);

/// Positions i where the strands at i and i+1 cross in the permutation braid:
/// sigma_i is a left divisor. Returned as a bitmask, bit i-1 for sigma_i.
unsigned long long starting_set(const Permutation& simple);
/// Positions i where sigma_i is a right divisor.
unsigned long long finishing_set(const Permutation& simple);

/// Canonical positive word of a permutation braid.
BraidWord permutation_braid_word(const Permutation& simple);

NormalForm normal_form(const BraidWord& w);
BraidWord to_word(const NormalForm& nf);

bool equal_in_bn(const BraidWord& u, const BraidWord& v);

}  // namespace ccb
