#include "lawrence_krammer.hpp"

#include <map>
#include <stdexcept>

namespace oracle {

namespace {

Laurent m(std::int64_t c, int q, int t) { return Laurent::monomial(c, q, t); }

}  // namespace

LawrenceKrammer::LawrenceKrammer(int n) : n_(n), dim_(n * (n - 1) / 2) {
  if (n < 2) throw std::invalid_argument("Lawrence-Krammer needs n >= 2");
  index_.assign(static_cast<std::size_t>(n * n), -1);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      index_[static_cast<std::size_t>(j * n + k)] = static_cast<int>(pairs_.size());
      pairs_.emplace_back(j, k);
    }
  for (int i = 1; i < n; ++i) {
    positive_.push_back(sparse_generator(i));
    negative_.push_back(sparse_generator(-i));
  }
}

// Strands and generators 0-based inside; column (j,k) is the image of basis vector (j,k).
std::vector<LawrenceKrammer::Column> LawrenceKrammer::sparse_generator(int letter) const {
  const int i = (letter > 0 ? letter : -letter) - 1;
  std::vector<Column> cols(static_cast<std::size_t>(dim_));
  for (const auto& [j, k] : pairs_) {
    auto& col = cols[static_cast<std::size_t>(index(j, k))];
    auto put = [&](int r1, int r2, Laurent v) { col.emplace_back(index(r1, r2), std::move(v)); };
    if (letter > 0) {
      if (i == j - 1) {
        put(i, k, m(1, 1, 0));
        put(i, j, m(1, 2, 0) + m(-1, 1, 0));
        put(j, k, m(1, 0, 0) + m(-1, 1, 0));
      } else if (i == j && i != k - 1) {
        put(j + 1, k, m(1, 0, 0));
      } else if (k - 1 == i && k - 1 != j) {
        put(j, i, m(1, 1, 0));
        put(j, k, m(1, 0, 0) + m(-1, 1, 0));
        put(i, k, m(1, 1, 1) + m(-1, 2, 1));
      } else if (i == k) {
        put(j, k + 1, m(1, 0, 0));
      } else if (i == j && j == k - 1) {
        put(j, k, m(-1, 2, 1));
      } else {
        put(j, k, m(1, 0, 0));
      }
    } else {
      if (i == j - 1) {
        put(j - 1, k, m(1, 0, 0));
      } else if (i == j && i != k - 1) {
        put(j + 1, k, m(1, -1, 0));
        put(j, k, m(1, 0, 0) + m(-1, -1, 0));
        put(j, j + 1, m(1, -1, -1) + m(-1, -2, -1));
      } else if (k - 1 == i && k - 1 != j) {
        put(j, k - 1, m(1, 0, 0));
      } else if (i == k) {
        put(j, k + 1, m(1, -1, 0));
        put(j, k, m(1, 0, 0) + m(-1, -1, 0));
        put(k, k + 1, m(-1, -1, 0) + m(1, -2, 0));
      } else if (i == j && j == k - 1) {
        put(j, k, m(-1, -2, -1));
      } else {
        put(j, k, m(1, 0, 0));
      }
    }
  }
  return cols;
}

LawrenceKrammer::Matrix LawrenceKrammer::identity() const {
  Matrix id(static_cast<std::size_t>(dim_), std::vector<Laurent>(static_cast<std::size_t>(dim_)));
  for (int c = 0; c < dim_; ++c) id[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)] = Laurent::constant(1);
  return id;
}

LawrenceKrammer::Matrix LawrenceKrammer::apply(const Matrix& a, const std::vector<Column>& g) const {
  Matrix out(static_cast<std::size_t>(dim_));
  for (int c = 0; c < dim_; ++c) {
    auto& col = out[static_cast<std::size_t>(c)];
    col.assign(static_cast<std::size_t>(dim_), Laurent{});
    for (const auto& [r, v] : g[static_cast<std::size_t>(c)]) {
      const auto& src = a[static_cast<std::size_t>(r)];
      for (int x = 0; x < dim_; ++x) {
        const auto& e = src[static_cast<std::size_t>(x)];
        if (!e.is_zero()) col[static_cast<std::size_t>(x)] = col[static_cast<std::size_t>(x)] + e * v;
      }
    }
  }
  return out;
}

LawrenceKrammer::Matrix LawrenceKrammer::generator(int letter) const {
  const auto& g = letter > 0 ? positive_[static_cast<std::size_t>(letter - 1)]
                             : negative_[static_cast<std::size_t>(-letter - 1)];
  return apply(identity(), g);
}

LawrenceKrammer::Matrix LawrenceKrammer::image(const ccb::BraidWord& w) const {
  if (w.strands() != n_) throw std::invalid_argument("strand count mismatch");
  auto out = identity();
  for (int letter : w.letters())
    out = apply(out, letter > 0 ? positive_[static_cast<std::size_t>(letter - 1)]
                                : negative_[static_cast<std::size_t>(-letter - 1)]);
  return out;
}

LawrenceKrammer::Matrix LawrenceKrammer::multiply(const Matrix& a, const Matrix& b) const {
  Matrix out(static_cast<std::size_t>(dim_), std::vector<Laurent>(static_cast<std::size_t>(dim_)));
  for (int c = 0; c < dim_; ++c)
    for (int r = 0; r < dim_; ++r) {
      const auto& v = b[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
      if (v.is_zero()) continue;
      for (int x = 0; x < dim_; ++x) {
        const auto& e = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(x)];
        if (!e.is_zero())
          out[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)] =
              out[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)] + e * v;
      }
    }
  return out;
}

bool equal_via_representation(const ccb::BraidWord& u, const ccb::BraidWord& v) {
  if (u.strands() != v.strands()) throw std::invalid_argument("strand count mismatch");
  if (u.strands() == 1) return true;
  static std::map<int, LawrenceKrammer> cache;
  auto it = cache.find(u.strands());
  if (it == cache.end()) it = cache.emplace(u.strands(), LawrenceKrammer(u.strands())).first;
  return it->second.image(u) == it->second.image(v);
}

}  // namespace oracle
