#include "ccbraid/permutation.hpp"

#include <sstream>

#include "ccbraid/error.hpp"

namespace ccb {

Permutation::Permutation(std::vector<int> one_line) : image_(std::move(one_line)) {
  const auto n = image_.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : image_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)])
      throw RangeError("not a permutation of 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw RangeError("negative permutation size");
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
  Permutation p;
  p.image_ = std::move(img);
  return p;
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n)
    throw RangeError("transposition point out of range");
  auto p = identity(n);
  std::swap(p.image_[static_cast<std::size_t>(i - 1)], p.image_[static_cast<std::size_t>(j - 1)]);
  return p;
}

Permutation Permutation::cycle(int n, std::span<const int> points) {
  auto img = identity(n).image_;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int v : points) {
    if (v < 1 || v > n || used[static_cast<std::size_t>(v)])
      throw RangeError("invalid cycle point " + std::to_string(v));
    used[static_cast<std::size_t>(v)] = true;
  }
  for (std::size_t k = 0; k < points.size(); ++k)
    img[static_cast<std::size_t>(points[k] - 1)] = points[(k + 1) % points.size()];
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i)
    inv[static_cast<std::size_t>(image_[i] - 1)] = static_cast<int>(i) + 1;
  Permutation p;
  p.image_ = std::move(inv);
  return p;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < image_.size(); ++i) out << (i ? "," : "") << image_[i];
  out << ']';
  return out.str();
}

std::string Permutation::cycle_notation() const {
  std::ostringstream out;
  std::vector<bool> done(image_.size(), false);
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (done[start] || image_[start] == static_cast<int>(start) + 1) continue;
    out << '(';
    auto i = start;
    bool first = true;
    while (!done[i]) {
      done[i] = true;
      out << (first ? "" : " ") << i + 1;
      first = false;
      i = static_cast<std::size_t>(image_[i] - 1);
    }
    out << ')';
  }
  auto s = out.str();
  return s.empty() ? "()" : s;
}

Permutation compose(const Permutation& first, const Permutation& then) {
  if (first.size() != then.size()) throw MismatchError("composing permutations of different sizes");
  std::vector<int> img(static_cast<std::size_t>(first.size()));
  for (int i = 1; i <= first.size(); ++i) img[static_cast<std::size_t>(i - 1)] = then(first(i));
  return Permutation(std::move(img));
}

}  // namespace ccb
