#include "ccbraid/garside.hpp"

#include <cstdlib>
#include <sstream>

#include "ccbraid/error.hpp"

namespace ccb {

namespace {

constexpr int kMaxStrands = 64;

Permutation adjacent(int n, int i) { return Permutation::transposition(n, i, i + 1); }

// Delta * A * Delta^{-1}: sigma_i -> sigma_{n-i}.
Permutation flip(const Permutation& p) {
  const int n = p.size();
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) img[static_cast<std::size_t>(i - 1)] = n + 1 - p(n + 1 - i);
  return Permutation(std::move(img));
}

// Moves letters from the front of `right` to the back of `left` until
// S(right) is contained in F(left). Returns whether anything moved.
bool left_weight(Permutation& left, Permutation& right) {
  bool moved = false;
  for (;;) {
    const auto movable = starting_set(right) & ~finishing_set(left);
    if (movable == 0) return moved;
    int i = 1;
    while (!(movable & (1ULL << (i - 1)))) ++i;
    const auto s = adjacent(left.size(), i);
    left = compose(left, s);
    right = compose(s, right);
    moved = true;
  }
}

}  // namespace

std::string NormalForm::to_string() const {
  std::ostringstream out;
  out << "D^" << infimum;
  for (const auto& f : factors) out << '*' << f.to_string();
  return out.str();
}

Permutation half_twist(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) img[static_cast<std::size_t>(i - 1)] = n + 1 - i;
  return Permutation(std::move(img));
}

unsigned long long starting_set(const Permutation& simple) {
  unsigned long long mask = 0;
  for (int i = 1; i < simple.size(); ++i)
    if (simple(i) > simple(i + 1)) mask |= 1ULL << (i - 1);
  return mask;
}

unsigned long long finishing_set(const Permutation& simple) {
  return starting_set(simple.inverse());
}

BraidWord permutation_braid_word(const Permutation& simple) {
  std::vector<int> letters;
  auto rest = simple;
  while (auto s = starting_set(rest)) {
    int i = 1;
    while (!(s & (1ULL << (i - 1)))) ++i;
    letters.push_back(i);
    rest = compose(adjacent(rest.size(), i), rest);
  }
  return BraidWord(simple.size(), std::move(letters));
}

NormalForm normal_form(const BraidWord& w) {
  const int n = w.strands();
  if (n > kMaxStrands) throw RangeError("normal form supports at most 64 strands");
  NormalForm nf;
  nf.strands = n;
  if (n == 1) return nf;

  const auto delta = half_twist(n);
  const auto id = Permutation::identity(n);

  // sigma_i^{-1} = Delta^{-1} (Delta sigma_i^{-1}); every Delta^{-1} is pushed to
  // the far left, flipping each factor it passes.
  const auto letters = w.letters();
  std::vector<Permutation> factors(letters.size(), id);
  int negatives_after = 0;
  for (std::size_t t = letters.size(); t-- > 0;) {
    const int k = letters[t];
    auto factor = k > 0 ? adjacent(n, k) : compose(delta, adjacent(n, -k));
    if (negatives_after % 2 == 1) factor = flip(factor);
    factors[t] = std::move(factor);
    if (k < 0) ++negatives_after;
  }
  nf.infimum = -negatives_after;

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t t = 0; t + 1 < factors.size(); ++t)
      changed |= left_weight(factors[t], factors[t + 1]);
  }

  std::size_t lead = 0;
  while (lead < factors.size() && factors[lead] == delta) ++lead;
  nf.infimum += static_cast<int>(lead);
  std::size_t tail = factors.size();
  while (tail > lead && factors[tail - 1].is_identity()) --tail;
  nf.factors.assign(factors.begin() + static_cast<std::ptrdiff_t>(lead),
                    factors.begin() + static_cast<std::ptrdiff_t>(tail));
  return nf;
}

BraidWord to_word(const NormalForm& nf) {
  auto w = BraidWord::identity(nf.strands);
  if (nf.strands > 1) {
    const auto delta_word = permutation_braid_word(half_twist(nf.strands));
    w = power(delta_word, nf.infimum);
  }
  for (const auto& f : nf.factors) w = concat(w, permutation_braid_word(f));
  return w;
}

bool equal_in_bn(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw MismatchError("comparing words on different strand counts");
  return normal_form(u) == normal_form(v);
}

}  // namespace ccb
