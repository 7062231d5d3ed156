#pragma once

#include <string>
#include <vector>

#include "ccbraid/braid_word.hpp"
#include "ccbraid/chromatic.hpp"
#include "ccbraid/graph.hpp"
#include "ccbraid/report.hpp"

namespace ccb {

/// Moves coordinates along g: the result at {g(i), g(j)} is v at {i, j}.
/// This is conjugation x -> psi(g)^{-1} x psi(g) on P(Gamma).
EdgeVector edge_action(const Permutation& g, const EdgeVector& v, const SimpleGraph& graph);

/// c(g, h) = psi(g) psi(h) psi(gh)^{-1} in P(C_n), for the section
/// psi(a^k b^r) = psi(a)^k psi(b)^r.
class Cocycle {
 public:
  Cocycle(int n, std::vector<EdgeVector> table);

  int n() const noexcept { return n_; }
  const EdgeVector& operator()(const DihedralElement& g, const DihedralElement& h) const {
    return table_[g.index() * static_cast<std::size_t>(2 * n_) + h.index()];
  }

 private:
  int n_;
  std::vector<EdgeVector> table_;
};

Cocycle compute_cocycle(int n);

/// An element j(vector) * psi(dihedral) of B(C_n).
struct CyclicBraidElement {
  EdgeVector vector;
  DihedralElement dihedral;

  std::string to_string() const;
  friend bool operator==(const CyclicBraidElement&, const CyclicBraidElement&) = default;
};

/// B(C_n) as the extension of Z^n by the dihedral group of order 2n.
class CyclicBraidGroup {
 public:
  explicit CyclicBraidGroup(int n);

  int n() const noexcept { return n_; }
  const SimpleGraph& graph() const noexcept { return quotient_.graph(); }
  const ChromaticQuotient& quotient() const noexcept { return quotient_; }
  const Cocycle& cocycle() const noexcept { return cocycle_; }

  /// psi(g) v psi(g)^{-1}.
  EdgeVector act(const DihedralElement& g, const EdgeVector& v) const;

  CyclicBraidElement identity() const;
  CyclicBraidElement edge_generator(int i, int j) const;
  CyclicBraidElement lift(const DihedralElement& g) const;
  CyclicBraidElement mul(const CyclicBraidElement& x, const CyclicBraidElement& y) const;
  CyclicBraidElement inv(const CyclicBraidElement& x) const;
  CyclicBraidElement to_element(const BraidWord& w) const;

  /// Exhaustive check of g1.c(g2,g3) + c(g1,g2g3) = c(g1,g2) + c(g1g2,g3).
  bool cocycle_condition_holds() const;

 private:
  void check(const CyclicBraidElement& x) const;

  int n_;
  ChromaticQuotient quotient_;
  Cocycle cocycle_;
};

/// Checks every relation of the B(C_n) presentation with the B(C_n) word
/// oracle, plus the extension model against the emitted relators.
Report verify_cyclic_presentation(int n);

}  // namespace ccb
