#pragma once

#include <cstdlib>
#include <random>
#include <vector>

#include "ccbraid/braid_word.hpp"

namespace oracle {

inline ccb::BraidWord random_word(std::mt19937_64& rng, int n, int max_length) {
  if (n < 2) return ccb::BraidWord::identity(n);
  std::uniform_int_distribution<int> len(0, max_length);
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<int> letters(static_cast<std::size_t>(len(rng)));
  for (auto& x : letters) x = sign(rng) ? gen(rng) : -gen(rng);
  return ccb::BraidWord(n, std::move(letters));
}

// One rewrite that preserves the braid: insert or delete a cancelling pair,
// swap distant commuting letters, or apply a braid relation (either sign).
inline bool artin_rewrite(std::mt19937_64& rng, std::vector<int>& w, int n) {
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution sign(0.5);
  auto pos = [&](std::size_t size) { return std::uniform_int_distribution<std::size_t>(0, size)(rng); };
  switch (kind(rng)) {
    case 0: {
      const int x = sign(rng) ? gen(rng) : -gen(rng);
      const auto p = pos(w.size());
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(p), {x, -x});
      return true;
    }
    case 1: {
      std::vector<std::size_t> spots;
      for (std::size_t p = 0; p + 1 < w.size(); ++p)
        if (w[p] == -w[p + 1]) spots.push_back(p);
      if (spots.empty()) return false;
      const auto p = spots[pos(spots.size() - 1)];
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(p), w.begin() + static_cast<std::ptrdiff_t>(p) + 2);
      return true;
    }
    case 2: {
      std::vector<std::size_t> spots;
      for (std::size_t p = 0; p + 1 < w.size(); ++p)
        if (std::abs(std::abs(w[p]) - std::abs(w[p + 1])) > 1) spots.push_back(p);
      if (spots.empty()) return false;
      const auto p = spots[pos(spots.size() - 1)];
      std::swap(w[p], w[p + 1]);
      return true;
    }
    default: {
      // x y x -> y x y with |x| and |y| adjacent and equal signs
      std::vector<std::size_t> spots;
      for (std::size_t p = 0; p + 2 < w.size(); ++p)
        if (w[p] == w[p + 2] && std::abs(std::abs(w[p]) - std::abs(w[p + 1])) == 1 &&
            (w[p] > 0) == (w[p + 1] > 0))
          spots.push_back(p);
      if (spots.empty() || sign(rng)) {
        // create a braid triple from nothing: insert x y x (y x y)^-1
        if (n < 3) return false;
        const int i = std::uniform_int_distribution<int>(1, n - 2)(rng);
        const int s = sign(rng) ? 1 : -1;
        const int x = s * i, y = s * (i + 1);
        const auto p = pos(w.size());
        w.insert(w.begin() + static_cast<std::ptrdiff_t>(p), {x, y, x, -y, -x, -y});
        return true;
      }
      const auto p = spots[pos(spots.size() - 1)];
      const int x = w[p], y = w[p + 1];
      w[p] = y;
      w[p + 1] = x;
      w[p + 2] = y;
      return true;
    }
  }
}

// A word equal to w in B_n, reached by `steps` random rewrites.
inline ccb::BraidWord artin_equivalent(std::mt19937_64& rng, const ccb::BraidWord& w, int steps) {
  std::vector<int> letters(w.letters().begin(), w.letters().end());
  if (w.strands() < 2) return w;
  for (int s = 0; s < steps; ++s) artin_rewrite(rng, letters, w.strands());
  return ccb::BraidWord(w.strands(), std::move(letters));
}

}  // namespace oracle
