#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccbraid/braid_word.hpp"
#include "ccbraid/graph.hpp"

namespace ccb {

/// Word in a free group: signed 1-based generator indices (k > 0 is g_k,
/// k < 0 is g_{|k|}^{-1}).
using FreeWord = std::vector<int>;

FreeWord free_reduce(FreeWord w);
FreeWord inverse(const FreeWord& w);
/// Cyclically reduced, then the least rotation of the word or its inverse.
FreeWord cyclic_canonical(const FreeWord& w);
FreeWord commutator(int x, int y);

/// A finite presentation <generators | relators>.
///
/// Relators are stored freely reduced; empty relators are never stored.
class Presentation {
 public:
  Presentation() = default;
  explicit Presentation(std::vector<std::string> generators);

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<FreeWord>& relators() const noexcept { return relators_; }
  std::size_t generator_count() const noexcept { return generators_.size(); }

  /// 1-based index of a generator name; throws if unknown.
  int index_of(std::string_view name) const;

  /// Appends the reduced relator; returns false (and stores nothing) if it
  /// reduces to the empty word.
  bool add_relator(FreeWord relator);
  /// lhs = rhs, stored as lhs * rhs^{-1}.
  bool add_equation(const FreeWord& lhs, const FreeWord& rhs);

 private:
  std::vector<std::string> generators_;
  std::vector<FreeWord> relators_;
};

/// Equal generator lists and equal relator multisets after cyclic canonicalisation.
bool same_relators(const Presentation& a, const Presentation& b);

enum class PresentationFormat { plain, gap };

/// plain: "generators: g1 g2 ..." then one relator per line, tokens separated
/// by spaces with a "^-1" suffix for inverses.
/// gap: a free group and its quotient, in the syntax of the GAP system.
std::string format_presentation(const Presentation& p, PresentationFormat format);
Presentation parse_presentation(std::string_view text);

/// Image of a free word under generator -> braid word.
BraidWord substitute(const FreeWord& w, std::span<const BraidWord> images);

/// "s_{i,j}" with i < j.
std::string pure_generator_name(int i, int j);

Presentation artin_presentation(int n);
Presentation markoff_presentation(int n);
Presentation pure_chromatic_presentation(const SimpleGraph& g);
Presentation dihedral_presentation(int n);
/// Free abelian presentation on s_e for the edges e of g: all pairwise commutators.
Presentation edge_abelian_presentation(const SimpleGraph& g);

/// Data turning presentations of A and G into one of an extension E.
struct ExtensionData {
  /// (t, s) -> gamma_t(s) = psi(t)^{-1} s psi(t) as a word over A's generators.
  /// Indices are 1-based generator indices of G and A respectively.
  std::map<std::pair<int, int>, FreeWord> action;
  /// For each relator q of G (same order), the word omega_q over A's
  /// generators equal to q(psi(t)) in E.
  std::vector<FreeWord> lifted_relators;
};

/// Generators S followed by psi(t) (named "psi_{t}"); relators R, then the
/// conjugation relators psi(t)^{-1} s psi(t) gamma_t(s)^{-1}, then
/// q(psi) omega_q^{-1}.
Presentation extension_presentation(const Presentation& a, const Presentation& g,
                                    const ExtensionData& data);

/// One row of the conjugation tables: psi(t)^{-1} s_source psi(t) = s_target,
/// t = 'a' or 'b', rows in the order of the case lists.
struct ConjugationEntry {
  char generator;
  Edge source;
  Edge target;
};
std::vector<ConjugationEntry> cyclic_conjugation_table(int n);

/// Right-hand sides of the closed forms, each a product of edge generators
/// s_e in the listed order.
struct CyclicClosedForms {
  /// psi(a)^n = s_{1,n} s_{n-1,n} s_{n-2,n-1} ... s_{1,2}
  std::vector<Edge> psi_a_power;
  /// psi(b)^2: empty for even n, s_{(n+1)/2,(n+3)/2} for odd n.
  std::vector<Edge> psi_b_square;
  /// psi(b)psi(a)psi(b)psi(a)
  std::vector<Edge> psi_b_psi_a_square;
  /// psi(a)psi(b)psi(a)psi(b): s_{1,2k}s_{k,k+1} for n = 2k,
  /// s_{1,2k+1}s_{k,k+1}s_{k+1,k+2} for n = 2k+1.
  std::vector<Edge> psi_a_psi_b_square;
};
CyclicClosedForms cyclic_closed_forms(int n);

/// The three relation families for B(C_n): commuting edge generators, the
/// conjugation tables of psi(a), psi(b), and the closed forms for psi(a)^n,
/// psi(b)^2 and psi(b)psi(a)psi(b)psi(a).
Presentation cyclic_braid_presentation(int n);

}  // namespace ccb
