#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

// Exact Laurent polynomial in q and t with int64 coefficients.
class Laurent {
 public:
  struct Term {
    int q;
    int t;
    std::int64_t c;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Laurent() = default;
  static Laurent monomial(std::int64_t c, int q, int t) {
    Laurent p;
    if (c != 0) p.terms_.push_back({q, t, c});
    return p;
  }
  static Laurent constant(std::int64_t c) { return monomial(c, 0, 0); }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  friend Laurent operator+(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + b.scaled(-1); }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent&, const Laurent&) = default;

 private:
  Laurent scaled(std::int64_t k) const;
  static bool less(const Term& x, const Term& y) { return x.q != y.q ? x.q < y.q : x.t < y.t; }
  std::vector<Term> terms_;  // sorted by (q, t), no zero coefficients
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

inline Laurent Laurent::scaled(std::int64_t k) const {
  Laurent r = *this;
  for (auto& term : r.terms_) term.c = checked_mul(term.c, k);
  return r;
}

inline Laurent operator+(const Laurent& a, const Laurent& b) {
  Laurent r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && Laurent::less(a.terms_[i], b.terms_[j]))) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || Laurent::less(b.terms_[j], a.terms_[i])) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      const auto c = checked_add(a.terms_[i].c, b.terms_[j].c);
      if (c != 0) r.terms_.push_back({a.terms_[i].q, a.terms_[i].t, c});
      ++i;
      ++j;
    }
  }
  return r;
}

inline Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& y : b.terms_) {
    Laurent part;
    part.terms_.reserve(a.terms_.size());
    for (const auto& x : a.terms_) part.terms_.push_back({x.q + y.q, x.t + y.t, checked_mul(x.c, y.c)});
    r = r + part;  // shifting by one monomial keeps the order
  }
  return r;
}

}  // namespace oracle
