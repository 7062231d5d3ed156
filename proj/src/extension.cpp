#include "ccbraid/extension.hpp"

#include <cstdlib>

#include "ccbraid/error.hpp"
#include "ccbraid/presentation.hpp"

namespace ccb {

EdgeVector edge_action(const Permutation& g, const EdgeVector& v, const SimpleGraph& graph) {
  if (!is_automorphism(graph, g))
    throw NotAutomorphismError("permutation " + g.cycle_notation() + " is not an automorphism of the graph");
  if (v.size() != graph.edge_count()) throw MismatchError("edge vector does not match the graph");
  auto out = EdgeVector::zero(v.size());
  for (std::size_t i = 0; i < graph.edges().size(); ++i) {
    const auto e = graph.edges()[i];
    out.coords[*graph.edge_index(g(e.u), g(e.v))] = v.coords[i];
  }
  return out;
}

Cocycle::Cocycle(int n, std::vector<EdgeVector> table) : n_(n), table_(std::move(table)) {
  if (table_.size() != static_cast<std::size_t>(4 * n * n))
    throw MismatchError("cocycle table needs (2n)^2 entries");
}

Cocycle compute_cocycle(int n) {
  if (n < 4) throw RangeError("cocycle of B(C_n) needs n >= 4");
  const ChromaticQuotient quotient(cycle(n));
  const auto elements = DihedralElement::all(n);
  std::vector<BraidWord> lifts;
  for (const auto& g : elements) lifts.push_back(dihedral_section(g));

  std::vector<EdgeVector> table;
  table.reserve(elements.size() * elements.size());
  for (const auto& g : elements)
    for (const auto& h : elements) {
      const BraidWord parts[] = {lifts[g.index()], lifts[h.index()], inverse(lifts[(g * h).index()])};
      table.push_back(quotient.edge_lk(concat(parts)));
    }
  return Cocycle(n, std::move(table));
}

std::string CyclicBraidElement::to_string() const {
  return "v=" + vector.to_string() + ";g=" + dihedral.to_string();
}

CyclicBraidGroup::CyclicBraidGroup(int n) : n_(n), quotient_(cycle(n)), cocycle_(compute_cocycle(n)) {}

EdgeVector CyclicBraidGroup::act(const DihedralElement& g, const EdgeVector& v) const {
  return edge_action(g.inverse().to_permutation(), v, graph());
}

CyclicBraidElement CyclicBraidGroup::identity() const {
  return {EdgeVector::zero(graph().edge_count()), DihedralElement::identity(n_)};
}

CyclicBraidElement CyclicBraidGroup::edge_generator(int i, int j) const {
  const auto idx = graph().edge_index(i, j);
  if (!idx) throw RangeError("{" + std::to_string(i) + "," + std::to_string(j) + "} is not an edge of C_n");
  return {EdgeVector::unit(graph().edge_count(), *idx), DihedralElement::identity(n_)};
}

CyclicBraidElement CyclicBraidGroup::lift(const DihedralElement& g) const {
  if (g.order_of_rotation() != n_) throw MismatchError("dihedral element of the wrong order");
  return {EdgeVector::zero(graph().edge_count()), g};
}

void CyclicBraidGroup::check(const CyclicBraidElement& x) const {
  if (x.dihedral.order_of_rotation() != n_ || x.vector.size() != graph().edge_count())
    throw MismatchError("element of a different cyclic braid group");
}

CyclicBraidElement CyclicBraidGroup::mul(const CyclicBraidElement& x, const CyclicBraidElement& y) const {
  check(x);
  check(y);
  // v1 psi(g1) v2 psi(g2) = v1 (psi(g1) v2 psi(g1)^{-1}) c(g1,g2) psi(g1 g2)
  auto v = x.vector + act(x.dihedral, y.vector) + cocycle_(x.dihedral, y.dihedral);
  return {std::move(v), x.dihedral * y.dihedral};
}

CyclicBraidElement CyclicBraidGroup::inv(const CyclicBraidElement& x) const {
  check(x);
  const auto g_inv = x.dihedral.inverse();
  auto v = act(g_inv, -(x.vector + cocycle_(x.dihedral, g_inv)));
  return {std::move(v), g_inv};
}

CyclicBraidElement CyclicBraidGroup::to_element(const BraidWord& w) const {
  auto e = quotient_.i_star(w);
  return {std::move(e.vector), DihedralElement::from_permutation(e.aut)};
}

bool CyclicBraidGroup::cocycle_condition_holds() const {
  const auto elements = DihedralElement::all(n_);
  for (const auto& g1 : elements)
    for (const auto& g2 : elements)
      for (const auto& g3 : elements) {
        const auto lhs = act(g1, cocycle_(g2, g3)) + cocycle_(g1, g2 * g3);
        const auto rhs = cocycle_(g1, g2) + cocycle_(g1 * g2, g3);
        if (lhs != rhs) return false;
      }
  return true;
}

namespace {

BraidWord edge_product(const std::vector<Edge>& edges, int n) {
  auto w = BraidWord::identity(n);
  for (auto e : edges) w = concat(w, s_word(e.u, e.v, n));
  return w;
}

std::string edge_list_name(const std::vector<Edge>& edges) {
  if (edges.empty()) return "e";
  std::string out;
  for (auto e : edges) out += pure_generator_name(e.u, e.v);
  return out;
}

}  // namespace

Report verify_cyclic_presentation(int n) {
  const CyclicBraidGroup group(n);
  const auto& quotient = group.quotient();
  const auto& graph = group.graph();
  const auto prefix = "n=" + std::to_string(n) + ":";
  Report report;

  auto describe = [&](const BraidWord& w) {
    try {
      return quotient.i_star(w).to_string();
    } catch (const Error&) {
      return std::string("not-in-B(C_n)");
    }
  };
  auto check = [&](std::string id, const BraidWord& lhs, const BraidWord& rhs) {
    bool pass = false;
    try {
      pass = quotient.equal(lhs, rhs);
    } catch (const Error&) {
      pass = false;
    }
    report.add({prefix + std::move(id), pass, describe(lhs), describe(rhs)});
  };

  const auto pa = psi_a_word(n);
  const auto pb = psi_b_word(n);

  const auto& edges = graph.edges();
  for (std::size_t x = 0; x < edges.size(); ++x)
    for (std::size_t y = x + 1; y < edges.size(); ++y) {
      const auto sx = s_word(edges[x].u, edges[x].v, n);
      const auto sy = s_word(edges[y].u, edges[y].v, n);
      check("R1:[" + pure_generator_name(edges[x].u, edges[x].v) + "," +
                pure_generator_name(edges[y].u, edges[y].v) + "]",
            concat(sx, sy), concat(sy, sx));
    }

  for (const auto& row : cyclic_conjugation_table(n)) {
    const auto& psi = row.generator == 'a' ? pa : pb;
    const BraidWord lhs[] = {inverse(psi), s_word(row.source.u, row.source.v, n), psi};
    check(std::string("R2:psi_") + row.generator + ":" + pure_generator_name(row.source.u, row.source.v) +
              "->" + pure_generator_name(row.target.u, row.target.v),
          concat(lhs), s_word(row.target.u, row.target.v, n));
  }

  const auto forms = cyclic_closed_forms(n);
  check("R3:psi_a^n=" + edge_list_name(forms.psi_a_power), power(pa, n), edge_product(forms.psi_a_power, n));
  check("R3:psi_b^2=" + edge_list_name(forms.psi_b_square), power(pb, 2), edge_product(forms.psi_b_square, n));
  check("R3:(psi_b.psi_a)^2=" + edge_list_name(forms.psi_b_psi_a_square), power(concat(pb, pa), 2),
        edge_product(forms.psi_b_psi_a_square, n));
  check("R3:(psi_a.psi_b)^2=" + edge_list_name(forms.psi_a_psi_b_square), power(concat(pa, pb), 2),
        edge_product(forms.psi_a_psi_b_square, n));
  if (n >= 6) {
    // (psi(b)psi(a))^2 = (a_{3,n} e_{4,n} ... e_{r(n)+1,s(n)+1})^2 s_{1,2}
    auto tail = a_word(3, n, n);
    for (int k = 3; k <= reflection_last(n); ++k) tail = concat(tail, e_word(k + 1, n + 3 - k, n));
    check("R3:reduction", power(concat(pb, pa), 2), concat(power(tail, 2), s_word(1, 2, n)));
  }

  // The extension model must satisfy every emitted relator.
  const auto presentation = cyclic_braid_presentation(n);
  std::vector<CyclicBraidElement> images;
  for (auto e : edges) images.push_back(group.edge_generator(e.u, e.v));
  images.push_back(group.lift(DihedralElement::rotation_generator(n)));
  images.push_back(group.lift(DihedralElement::reflection_generator(n)));
  std::size_t satisfied = 0;
  for (const auto& r : presentation.relators()) {
    auto x = group.identity();
    for (int letter : r) {
      const auto& img = images[static_cast<std::size_t>(std::abs(letter) - 1)];
      x = group.mul(x, letter > 0 ? img : group.inv(img));
    }
    satisfied += x == group.identity() ? 1 : 0;
  }
  report.add({prefix + "model:relators", satisfied == presentation.relators().size(),
              "satisfied=" + std::to_string(satisfied), "total=" + std::to_string(presentation.relators().size())});
  return report;
}

}  // namespace ccb
