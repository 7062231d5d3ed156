#include "ccbraid/verify.hpp"

#include <algorithm>
#include <string>

#include "ccbraid/chromatic.hpp"
#include "ccbraid/error.hpp"
#include "ccbraid/extension.hpp"
#include "ccbraid/garside.hpp"
#include "ccbraid/presentation.hpp"

namespace ccb {

namespace {

std::string tag(const std::string& id, int n) { return id + ":n=" + std::to_string(n); }

void check_bn(Report& report, std::string id, const BraidWord& lhs, const BraidWord& rhs) {
  const auto l = normal_form(lhs);
  const auto r = normal_form(rhs);
  report.add({std::move(id), l == r, l.to_string(), r.to_string()});
}

BraidWord word(int n, std::initializer_list<BraidWord> parts) {
  std::vector<BraidWord> v(parts);
  v.insert(v.begin(), BraidWord::identity(n));
  return concat(v);
}

BraidWord sigma(int i, int n) { return BraidWord(n, {i}); }

std::vector<BraidWord> markoff_images(int n) {
  std::vector<BraidWord> images;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) images.push_back(s_word(i, j, n));
  return images;
}

std::string relator_id(const std::string& prefix, std::size_t index) {
  return prefix + ":relator=" + std::to_string(index + 1);
}

}  // namespace

Report identity_suite(int n) {
  if (n < 3) throw RangeError("identity suite needs n >= 3");
  Report report;
  for (int i = 1; i + 1 < n; ++i)
    check_bn(report, tag("identity1", n) + ":i=" + std::to_string(i),
             word(n, {sigma(i + 1, n), sigma(i, n), sigma(i + 1, n), sigma(i + 1, n)}),
             word(n, {sigma(i, n), sigma(i, n), sigma(i + 1, n), sigma(i, n)}));

  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j)
      for (int k = i + 1; k < j; ++k)
        check_bn(report,
                 tag("identity2", n) + ":i=" + std::to_string(i) + ",j=" + std::to_string(j) + ",k=" +
                     std::to_string(k),
                 concat(a_word(i, j, n), sigma(k, n)), concat(sigma(k - 1, n), a_word(i, j, n)));

  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = i + 1; k <= j; ++k)
        for (int l = k + 1; l <= j; ++l)
          check_bn(report,
                   tag("identity3", n) + ":i=" + std::to_string(i) + ",j=" + std::to_string(j) + ",k=" +
                       std::to_string(k) + ",l=" + std::to_string(l),
                   concat(a_word(i, j, n), a_word(k, l, n)),
                   concat(a_word(k - 1, l - 1, n), a_word(i, j, n)));

  if (n >= 4) {
    const int r = reflection_last(n);
    for (int k = 2; k <= r; ++k)
      for (int l = k + 1; l <= r; ++l) {
        const auto ek = e_word(k, n + 2 - k, n);
        const auto el = e_word(l, n + 2 - l, n);
        check_bn(report, tag("identity4", n) + ":k=" + std::to_string(k) + ",l=" + std::to_string(l),
                 concat(ek, el), concat(el, ek));
      }
    const auto a1n = a_word(1, n, n);
    for (int k = 3; k <= (n + 1) / 2; ++k)
      check_bn(report, tag("identity5", n) + ":k=" + std::to_string(k),
               concat(e_word(k, n + 2 - k, n), a1n), concat(a1n, e_word(k + 1, n + 3 - k, n)));
  }
  return report;
}

Report artin_suite(int n) {
  const auto p = artin_presentation(n);
  std::vector<BraidWord> images;
  for (int i = 1; i < n; ++i) images.push_back(sigma(i, n));
  Report report;
  for (std::size_t q = 0; q < p.relators().size(); ++q)
    check_bn(report, relator_id(tag("artin", n), q), substitute(p.relators()[q], images),
             BraidWord::identity(n));
  return report;
}

Report markoff_suite(int n) {
  const auto p = markoff_presentation(n);
  const auto images = markoff_images(n);
  Report report;
  for (std::size_t q = 0; q < p.relators().size(); ++q)
    check_bn(report, relator_id(tag("markoff", n), q), substitute(p.relators()[q], images),
             BraidWord::identity(n));
  return report;
}

Report pure_presentation_suite(const SimpleGraph& g, const std::string& label) {
  const int n = g.vertex_count();
  const auto p = pure_chromatic_presentation(g);
  std::vector<BraidWord> images;
  for (auto e : g.edges()) images.push_back(s_word(e.u, e.v, n));
  const ChromaticQuotient quotient(g);
  const auto identity = BraidWord::identity(n);
  Report report;
  for (std::size_t q = 0; q < p.relators().size(); ++q) {
    const auto w = substitute(p.relators()[q], images);
    const bool pass = quotient.equal(w, identity);
    std::string lhs = quotient.triangle_free() ? quotient.i_star(w).to_string() : normal_form(w).to_string();
    std::string rhs = quotient.triangle_free() ? quotient.i_star(identity).to_string()
                                               : normal_form(identity).to_string();
    report.add({relator_id("pure:" + label, q), pass, std::move(lhs), std::move(rhs)});
  }
  return report;
}

Report verify_all(int max_n) {
  if (max_n < 4 || max_n > 12) throw RangeError("max-n must lie in 4..12");
  Report report;
  for (int n = 4; n <= max_n; ++n) report.append(identity_suite(n));
  for (int n = 3; n <= std::min(max_n, 6); ++n) {
    report.append(artin_suite(n));
    report.append(markoff_suite(n));
  }
  for (int n = 3; n <= std::min(max_n, 5); ++n)
    report.append(pure_presentation_suite(complete(n), "complete:" + std::to_string(n)));
  for (int n = 4; n <= max_n; ++n)
    report.append(pure_presentation_suite(cycle(n), "cycle:" + std::to_string(n)));
  for (int n = 2; n <= max_n; ++n)
    report.append(pure_presentation_suite(path(n), "path:" + std::to_string(n)));
  report.append(pure_presentation_suite(star(5), "star:5"));
  for (int n = 4; n <= max_n; ++n) report.append(verify_cyclic_presentation(n));
  return report;
}

}  // namespace ccb
