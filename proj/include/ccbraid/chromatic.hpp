#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccbraid/braid_word.hpp"
#include "ccbraid/graph.hpp"
#include "ccbraid/permutation.hpp"

namespace ccb {

/// Integer coordinates on the edges of a graph, in the graph's edge order.
/// For triangle-free graphs these are coordinates on P(Gamma) = Z^{E(Gamma)}.
struct EdgeVector {
  std::vector<std::int64_t> coords;

  static EdgeVector zero(std::size_t edges) { return {std::vector<std::int64_t>(edges, 0)}; }
  static EdgeVector unit(std::size_t edges, std::size_t index);

  std::size_t size() const noexcept { return coords.size(); }
  bool is_zero() const noexcept;
  /// "(1,0,-2)"
  std::string to_string() const;

  EdgeVector& operator+=(const EdgeVector& rhs);
  EdgeVector& operator-=(const EdgeVector& rhs);
  friend EdgeVector operator+(EdgeVector lhs, const EdgeVector& rhs) { return lhs += rhs; }
  friend EdgeVector operator-(EdgeVector lhs, const EdgeVector& rhs) { return lhs -= rhs; }
  friend EdgeVector operator-(EdgeVector v) {
    for (auto& c : v.coords) c = -c;
    return v;
  }
  friend bool operator==(const EdgeVector&, const EdgeVector&) = default;
};

/// Normal form of an element of B(Gamma), Gamma triangle-free: the element is
/// j(vector) * psi(aut) for the fixed section psi.
struct ChromaticElement {
  EdgeVector vector;
  Permutation aut;

  /// "v=(1,0,0,0);g=[1,2,3,4]"
  std::string to_string() const;
  friend bool operator==(const ChromaticElement&, const ChromaticElement&) = default;
};

/// Section word for a dihedral symmetry of C_n (n >= 4):
/// psi(a^k) = psi(a)^k, psi(a^k b) = psi(a)^k psi(b).
BraidWord dihedral_section(const DihedralElement& g);

/// The quotient B_n|Aut(Gamma) -> B(Gamma) for one fixed graph.
class ChromaticQuotient {
 public:
  explicit ChromaticQuotient(SimpleGraph graph);

  const SimpleGraph& graph() const noexcept { return graph_; }
  bool triangle_free() const noexcept { return triangle_free_; }

  /// Half the crossing count of each edge's strand pair; w must be pure.
  EdgeVector edge_lk(const BraidWord& w) const;
  /// The underlying permutation, which must be an automorphism of the graph.
  Permutation phi(const BraidWord& w) const;
  /// A word whose permutation is g. Dihedral lifts on cycles, otherwise a
  /// product of strand exchanges read off a selection sort of g.
  BraidWord section(const Permutation& g) const;
  ChromaticElement i_star(const BraidWord& w) const;
  /// Word problem in B(Gamma): triangle-free graphs, or complete graphs via B_n.
  bool equal(const BraidWord& u, const BraidWord& v) const;

 private:
  void check_strands(const BraidWord& w) const;
  void require_triangle_free() const;

  SimpleGraph graph_;
  bool triangle_free_;
  bool complete_;
  bool cycle_;
};

EdgeVector edge_lk(const BraidWord& w, const SimpleGraph& g);
Permutation phi(const BraidWord& w, const SimpleGraph& g);
BraidWord section(const Permutation& aut, const SimpleGraph& g);
ChromaticElement i_star(const BraidWord& w, const SimpleGraph& g);
bool equal_in_bgamma(const BraidWord& u, const BraidWord& v, const SimpleGraph& g);

}  // namespace ccb
