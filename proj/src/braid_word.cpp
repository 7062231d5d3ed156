#include "ccbraid/braid_word.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "ccbraid/error.hpp"

namespace ccb {

namespace {

void check_letter(int k, int strands) {
  if (k == 0 || std::abs(k) >= strands)
    throw RangeError("generator index " + std::to_string(k) + " out of range for " +
                     std::to_string(strands) + " strands");
}

void require_strands(int n) {
  if (n < 1) throw RangeError("strand count must be positive");
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  require_strands(strands_);
  for (int k : letters_) check_letter(k, strands_);
}

BraidWord parse_word(std::string_view text, int strands) {
  require_strands(strands);
  std::vector<int> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const auto start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    const auto token = text.substr(start, pos - start);
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    // from_chars rejects a leading '+', which the grammar does not allow either.
    auto [end, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || end != last)
      throw ParseError("malformed generator '" + std::string(token) + "'", start);
    if (value == 0) throw ParseError("generator index 0", start);
    check_letter(value, strands);
    letters.push_back(value);
  }
  return BraidWord(strands, std::move(letters));
}

std::string format_word(const BraidWord& w) {
  std::ostringstream out;
  bool first = true;
  for (int k : w.letters()) {
    out << (first ? "" : " ") << k;
    first = false;
  }
  return out.str();
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands())
    throw MismatchError("concatenating words on " + std::to_string(u.strands()) + " and " +
                        std::to_string(v.strands()) + " strands");
  std::vector<int> letters(u.letters().begin(), u.letters().end());
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.strands(), std::move(letters));
}

BraidWord concat(std::span<const BraidWord> words) {
  if (words.empty()) throw RangeError("concatenation of no words has no strand count");
  std::vector<int> letters;
  for (const auto& w : words) {
    if (w.strands() != words.front().strands()) throw MismatchError("strand count mismatch");
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  }
  return BraidWord(words.front().strands(), std::move(letters));
}

BraidWord inverse(const BraidWord& w) {
  std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
  for (int& k : letters) k = -k;
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord power(const BraidWord& w, int exponent) {
  const auto base = exponent < 0 ? inverse(w) : w;
  std::vector<int> letters;
  for (int e = 0; e < std::abs(exponent); ++e)
    letters.insert(letters.end(), base.letters().begin(), base.letters().end());
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> stack;
  stack.reserve(w.length());
  for (int k : w.letters()) {
    if (!stack.empty() && stack.back() == -k)
      stack.pop_back();
    else
      stack.push_back(k);
  }
  return BraidWord(w.strands(), std::move(stack));
}

BraidWord a_word(int i, int j, int n) {
  require_strands(n);
  if (i < 1 || i > j || j > n)
    throw RangeError("a_word needs 1 <= i <= j <= n, got (" + std::to_string(i) + "," +
                     std::to_string(j) + "," + std::to_string(n) + ")");
  std::vector<int> letters;
  for (int k = j - 1; k >= i; --k) letters.push_back(k);
  return BraidWord(n, std::move(letters));
}

BraidWord s_word(int i, int j, int n) {
  require_strands(n);
  if (i < 1 || i >= j || j > n)
    throw RangeError("s_word needs 1 <= i < j <= n, got (" + std::to_string(i) + "," +
                     std::to_string(j) + "," + std::to_string(n) + ")");
  std::vector<int> letters;
  for (int k = j - 1; k > i; --k) letters.push_back(k);
  letters.push_back(i);
  letters.push_back(i);
  for (int k = i + 1; k < j; ++k) letters.push_back(-k);
  return BraidWord(n, std::move(letters));
}

BraidWord e_word(int k, int l, int n) {
  if (k < 1 || k >= l || l > n)
    throw RangeError("e_word needs 1 <= k < l <= n, got (" + std::to_string(k) + "," +
                     std::to_string(l) + "," + std::to_string(n) + ")");
  return concat(a_word(k, l, n), inverse(a_word(k + 1, l, n)));
}

int reflection_last(int n) { return n % 2 == 0 ? n / 2 : (n + 1) / 2; }

BraidWord psi_a_word(int n) {
  if (n < 4) throw RangeError("psi_a_word needs n >= 4");
  return a_word(1, n, n);
}

BraidWord psi_b_word(int n) {
  if (n < 4) throw RangeError("psi_b_word needs n >= 4");
  auto w = BraidWord::identity(n);
  for (int k = 2; k <= reflection_last(n); ++k) w = concat(w, e_word(k, n + 2 - k, n));
  return w;
}

Permutation perm_of(const BraidWord& w) {
  const int n = w.strands();
  // strand_at[p] = starting position of the strand currently at position p.
  std::vector<int> strand_at(static_cast<std::size_t>(n) + 1);
  for (int p = 1; p <= n; ++p) strand_at[static_cast<std::size_t>(p)] = p;
  for (int k : w.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(k));
    std::swap(strand_at[i], strand_at[i + 1]);
  }
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) image[static_cast<std::size_t>(strand_at[static_cast<std::size_t>(p)] - 1)] = p;
  return Permutation(std::move(image));
}

CrossingMatrix::CrossingMatrix(int n)
    : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
  require_strands(n);
}

void CrossingMatrix::add(int p, int q, std::int64_t delta) {
  data_[static_cast<std::size_t>((p - 1) * n_ + (q - 1))] += delta;
  data_[static_cast<std::size_t>((q - 1) * n_ + (p - 1))] += delta;
}

CrossingMatrix CrossingMatrix::pulled_back(const Permutation& relabel) const {
  if (relabel.size() != n_) throw MismatchError("relabelling of the wrong size");
  CrossingMatrix out(n_);
  for (int p = 1; p <= n_; ++p)
    for (int q = 1; q <= n_; ++q)
      out.data_[static_cast<std::size_t>((p - 1) * n_ + (q - 1))] = at(relabel(p), relabel(q));
  return out;
}

CrossingMatrix operator+(CrossingMatrix lhs, const CrossingMatrix& rhs) {
  if (lhs.n_ != rhs.n_) throw MismatchError("adding crossing matrices of different sizes");
  for (std::size_t i = 0; i < lhs.data_.size(); ++i) lhs.data_[i] += rhs.data_[i];
  return lhs;
}

CrossingMatrix crossing_matrix(const BraidWord& w) {
  const int n = w.strands();
  CrossingMatrix m(n);
  std::vector<int> strand_at(static_cast<std::size_t>(n) + 1);
  for (int p = 1; p <= n; ++p) strand_at[static_cast<std::size_t>(p)] = p;
  for (int k : w.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(k));
    m.add(strand_at[i], strand_at[i + 1], k > 0 ? 1 : -1);
    std::swap(strand_at[i], strand_at[i + 1]);
  }
  return m;
}

}  // namespace ccb
