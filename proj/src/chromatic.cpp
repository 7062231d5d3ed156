#include "ccbraid/chromatic.hpp"

#include <sstream>

#include "ccbraid/error.hpp"
#include "ccbraid/garside.hpp"

namespace ccb {

EdgeVector EdgeVector::unit(std::size_t edges, std::size_t index) {
  auto v = zero(edges);
  v.coords.at(index) = 1;
  return v;
}

bool EdgeVector::is_zero() const noexcept {
  for (auto c : coords)
    if (c != 0) return false;
  return true;
}

std::string EdgeVector::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) out << (i ? "," : "") << coords[i];
  out << ')';
  return out.str();
}

EdgeVector& EdgeVector::operator+=(const EdgeVector& rhs) {
  if (rhs.size() != size()) throw MismatchError("edge vectors of different length");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += rhs.coords[i];
  return *this;
}

EdgeVector& EdgeVector::operator-=(const EdgeVector& rhs) {
  if (rhs.size() != size()) throw MismatchError("edge vectors of different length");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= rhs.coords[i];
  return *this;
}

std::string ChromaticElement::to_string() const {
  return "v=" + vector.to_string() + ";g=" + aut.to_string();
}

BraidWord dihedral_section(const DihedralElement& g) {
  const int n = g.order_of_rotation();
  auto w = power(psi_a_word(n), g.rotation());
  if (g.reflected()) w = concat(w, psi_b_word(n));
  return w;
}

ChromaticQuotient::ChromaticQuotient(SimpleGraph graph)
    : graph_(std::move(graph)),
      triangle_free_(is_triangle_free(graph_)),
      complete_(is_complete(graph_)),
      cycle_(is_cycle(graph_)) {}

void ChromaticQuotient::check_strands(const BraidWord& w) const {
  if (w.strands() != graph_.vertex_count())
    throw MismatchError("word on " + std::to_string(w.strands()) + " strands over a graph with " +
                        std::to_string(graph_.vertex_count()) + " vertices");
}

void ChromaticQuotient::require_triangle_free() const {
  if (!triangle_free_)
    throw OutOfScopeError("word problem out of scope: graph contains a 3-circuit");
}

EdgeVector ChromaticQuotient::edge_lk(const BraidWord& w) const {
  check_strands(w);
  if (!perm_of(w).is_identity()) throw Error("edge_lk needs a pure braid word");
  const auto crossings = crossing_matrix(w);
  auto v = EdgeVector::zero(graph_.edge_count());
  for (std::size_t i = 0; i < graph_.edges().size(); ++i) {
    const auto e = graph_.edges()[i];
    v.coords[i] = crossings.at(e.u, e.v) / 2;
  }
  return v;
}

Permutation ChromaticQuotient::phi(const BraidWord& w) const {
  check_strands(w);
  auto p = perm_of(w);
  if (!is_automorphism(graph_, p))
    throw NotAutomorphismError("permutation " + p.cycle_notation() +
                               " is not an automorphism of the graph");
  return p;
}

BraidWord ChromaticQuotient::section(const Permutation& g) const {
  const int n = graph_.vertex_count();
  if (!is_automorphism(graph_, g))
    throw NotAutomorphismError("permutation " + g.cycle_notation() + " is not an automorphism of the graph");
  if (cycle_ && n >= 4) return dihedral_section(DihedralElement::from_permutation(g));

  // Sort the one-line notation by position swaps t_1, t_2, ...; then
  // g = t_1 t_2 ... t_m and each t realises as a strand exchange.
  auto line = g.one_line();
  auto w = BraidWord::identity(n);
  for (int p = 1; p <= n; ++p) {
    int q = p;
    while (line[static_cast<std::size_t>(q - 1)] != p) ++q;
    if (q == p) continue;
    std::swap(line[static_cast<std::size_t>(p - 1)], line[static_cast<std::size_t>(q - 1)]);
    w = concat(w, e_word(p, q, n));
  }
  return w;
}

ChromaticElement ChromaticQuotient::i_star(const BraidWord& w) const {
  require_triangle_free();
  auto g = phi(w);
  auto v = edge_lk(concat(w, inverse(section(g))));
  return {std::move(v), std::move(g)};
}

bool ChromaticQuotient::equal(const BraidWord& u, const BraidWord& v) const {
  check_strands(u);
  check_strands(v);
  if (triangle_free_) {
    if (phi(u) != phi(v)) return false;
    return edge_lk(concat(u, inverse(v))).is_zero();
  }
  if (complete_) return equal_in_bn(u, v);
  throw OutOfScopeError("word problem out of scope: graph contains a 3-circuit and is not complete");
}

EdgeVector edge_lk(const BraidWord& w, const SimpleGraph& g) { return ChromaticQuotient(g).edge_lk(w); }
Permutation phi(const BraidWord& w, const SimpleGraph& g) { return ChromaticQuotient(g).phi(w); }
BraidWord section(const Permutation& aut, const SimpleGraph& g) {
  return ChromaticQuotient(g).section(aut);
}
ChromaticElement i_star(const BraidWord& w, const SimpleGraph& g) { return ChromaticQuotient(g).i_star(w); }
bool equal_in_bgamma(const BraidWord& u, const BraidWord& v, const SimpleGraph& g) {
  return ChromaticQuotient(g).equal(u, v);
}

}  // namespace ccb
