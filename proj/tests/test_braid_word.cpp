#include <doctest.h>

#include <random>

#include "ccbraid/braid_word.hpp"
#include "ccbraid/error.hpp"
#include "support/random_words.hpp"

using namespace ccb;

namespace {

BraidWord w(int n, std::vector<int> letters) { return BraidWord(n, std::move(letters)); }

// Crossing matrix by following every strand through the diagram, with no
// reuse of the library's bookkeeping.
std::vector<std::vector<long>> simulate_crossings(const BraidWord& word) {
  const int n = word.strands();
  std::vector<int> at(static_cast<std::size_t>(n + 1));  // at[position] = strand label
  for (int p = 1; p <= n; ++p) at[static_cast<std::size_t>(p)] = p;
  std::vector<std::vector<long>> m(static_cast<std::size_t>(n + 1), std::vector<long>(static_cast<std::size_t>(n + 1)));
  for (int x : word.letters()) {
    const int i = std::abs(x);
    const int a = at[static_cast<std::size_t>(i)], b = at[static_cast<std::size_t>(i + 1)];
    m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += x > 0 ? 1 : -1;
    m[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] += x > 0 ? 1 : -1;
    std::swap(at[static_cast<std::size_t>(i)], at[static_cast<std::size_t>(i + 1)]);
  }
  return m;
}

}  // namespace

TEST_CASE("words validate their letters") {
  CHECK_THROWS_AS(w(3, {3}), RangeError);
  CHECK_THROWS_AS(w(3, {0}), RangeError);
  CHECK_NOTHROW(w(3, {2, -2, 1}));
  CHECK(BraidWord::identity(4).empty());
}

TEST_CASE("parse and format") {
  CHECK(parse_word("1 -2 1", 3) == w(3, {1, -2, 1}));
  CHECK(parse_word("  ", 3).empty());
  CHECK(format_word(w(4, {3, -1})) == "3 -1");
  CHECK_THROWS_AS(parse_word("1 x", 3), ParseError);
  CHECK_THROWS_AS(parse_word("1 0", 3), ParseError);
  CHECK_THROWS_AS(parse_word("3", 3), RangeError);
  try {
    parse_word("1 2 y", 3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("parse and format round trip") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const auto u = oracle::random_word(rng, 2 + trial % 7, 25);
    CHECK(parse_word(format_word(u), u.strands()) == u);
  }
  CHECK(format_word(parse_word("2 -1 3", 4)) == "2 -1 3");
}

TEST_CASE("concat, inverse, power, free reduction") {
  CHECK(concat(w(3, {1}), w(3, {-2})) == w(3, {1, -2}));
  CHECK_THROWS_AS(concat(w(3, {1}), w(4, {1})), MismatchError);
  CHECK(inverse(w(3, {1, -2})) == w(3, {2, -1}));
  CHECK(power(w(3, {1, 2}), 2) == w(3, {1, 2, 1, 2}));
  CHECK(power(w(3, {1, 2}), -1) == w(3, {-2, -1}));
  CHECK(power(w(3, {1}), 0).empty());
  CHECK(free_reduce(w(3, {1, 2, -2, -1, 2})) == w(3, {2}));
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const auto u = oracle::random_word(rng, 5, 20);
    CHECK(free_reduce(concat(u, inverse(u))).empty());
  }
}

TEST_CASE("named word families") {
  CHECK(a_word(1, 3, 3) == w(3, {2, 1}));
  CHECK(a_word(2, 2, 4).empty());
  CHECK(s_word(1, 3, 3) == w(3, {2, 1, 1, -2}));
  CHECK(s_word(2, 4, 4) == w(4, {3, 2, 2, -3}));
  CHECK(e_word(1, 2, 4) == w(4, {1}));
  CHECK(e_word(2, 4, 4) == w(4, {3, 2, -3}));
  CHECK(psi_a_word(4) == w(4, {3, 2, 1}));
  CHECK_THROWS_AS(psi_a_word(3), RangeError);
  CHECK_THROWS_AS(psi_b_word(3), RangeError);
  CHECK(reflection_last(4) == 2);
  CHECK(reflection_last(5) == 3);
  CHECK(reflection_partner(5) == 4);
  CHECK(reflection_last(8) == 4);
  CHECK(reflection_last(9) == 5);
}

TEST_CASE("perm_of") {
  CHECK(perm_of(w(3, {1})) == Permutation::transposition(3, 1, 2));
  for (int n = 2; n <= 9; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        CHECK(perm_of(s_word(i, j, n)).is_identity());
        CHECK(perm_of(e_word(i, j, n)) == Permutation::transposition(n, i, j));
      }
  for (int n = 4; n <= 9; ++n) {
    std::vector<int> points;
    for (int i = 1; i <= n; ++i) points.push_back(i);
    CHECK(perm_of(psi_a_word(n)) == Permutation::cycle(n, points));
    // the word psi(b)psi(a)psi(b)psi(a) is pure
    CHECK(perm_of(power(concat(psi_b_word(n), psi_a_word(n)), 2)).is_identity());
  }
  CHECK(perm_of(psi_a_word(4)).cycle_notation() == "(1 2 3 4)");
  CHECK(perm_of(psi_b_word(5)).cycle_notation() == "(2 5)(3 4)");
  CHECK(perm_of(psi_b_word(4)).cycle_notation() == "(2 4)");
}

TEST_CASE("perm_of is a monoid homomorphism") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + trial % 8;
    const auto u = oracle::random_word(rng, n, 20);
    const auto v = oracle::random_word(rng, n, 20);
    CHECK(perm_of(concat(u, v)) == compose(perm_of(u), perm_of(v)));
  }
}

TEST_CASE("crossing matrix") {
  for (int n = 2; n <= 7; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const auto m = crossing_matrix(s_word(i, j, n));
        for (int p = 1; p <= n; ++p)
          for (int q = 1; q <= n; ++q) {
            const bool pair = (p == i && q == j) || (p == j && q == i);
            CHECK(m.at(p, q) == (pair ? 2 : 0));
          }
      }
  CHECK(crossing_matrix(w(3, {1, -1})) == CrossingMatrix(3));
  for (int n = 4; n <= 8; ++n) {
    const auto m = crossing_matrix(power(psi_a_word(n), n));
    for (int p = 1; p <= n; ++p)
      for (int q = 1; q <= n; ++q) CHECK(m.at(p, q) == (p == q ? 0 : 2));
  }
}

TEST_CASE("crossing matrix agrees with strand simulation") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const auto u = oracle::random_word(rng, 2 + trial % 6, 30);
    const auto m = crossing_matrix(u);
    const auto sim = simulate_crossings(u);
    for (int p = 1; p <= u.strands(); ++p)
      for (int q = 1; q <= u.strands(); ++q)
        CHECK(m.at(p, q) == sim[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]);
  }
}

TEST_CASE("crossing matrix is additive under relabelling") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + trial % 6;
    const auto u = oracle::random_word(rng, n, 15);
    const auto v = oracle::random_word(rng, n, 15);
    CHECK(crossing_matrix(concat(u, v)) == crossing_matrix(u) + crossing_matrix(v).pulled_back(perm_of(u)));
  }
}

TEST_CASE("pure words have even crossing counts") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 2 + trial % 4;
    const auto u = oracle::random_word(rng, n, 12);
    // close u into a pure braid: bubble-sort the strand labels left at each position
    const auto p = perm_of(u);
    std::vector<int> label(static_cast<std::size_t>(n + 1));
    for (int s = 1; s <= n; ++s) label[static_cast<std::size_t>(p(s))] = s;
    std::vector<int> tail;
    for (int sweep = 1; sweep < n; ++sweep)
      for (int b = 1; b < n; ++b)
        if (label[static_cast<std::size_t>(b)] > label[static_cast<std::size_t>(b + 1)]) {
          std::swap(label[static_cast<std::size_t>(b)], label[static_cast<std::size_t>(b + 1)]);
          tail.push_back(b);
        }
    const auto pure = concat(u, BraidWord(n, tail));
    REQUIRE(perm_of(pure).is_identity());
    const auto m = crossing_matrix(pure);
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) CHECK(m.at(a, b) % 2 == 0);
  }
}
