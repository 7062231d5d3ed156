#include "ccbraid/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>
#include <sstream>

#include "ccbraid/error.hpp"

namespace ccb {

FreeWord free_reduce(FreeWord w) {
  FreeWord out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

FreeWord inverse(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

FreeWord cyclic_canonical(const FreeWord& w) {
  auto r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  FreeWord core(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
  if (core.empty()) return core;
  FreeWord best = core;
  for (const auto& base : {core, inverse(core)}) {
    auto rotated = base;
    for (std::size_t k = 0; k < base.size(); ++k) {
      std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
      best = std::min(best, rotated);
    }
  }
  return best;
}

FreeWord commutator(int x, int y) { return {x, y, -x, -y}; }

Presentation::Presentation(std::vector<std::string> generators) : generators_(std::move(generators)) {
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.empty() || g.find_first_of(" \t\n^") != std::string::npos)
      throw Error("invalid generator name '" + g + "'");
    if (!seen.insert(g).second) throw Error("duplicate generator '" + g + "'");
  }
}

int Presentation::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i] == name) return static_cast<int>(i) + 1;
  throw Error("unknown generator '" + std::string(name) + "'");
}

bool Presentation::add_relator(FreeWord relator) {
  for (int x : relator)
    if (x == 0 || static_cast<std::size_t>(std::abs(x)) > generators_.size())
      throw RangeError("relator uses undeclared generator " + std::to_string(x));
  auto reduced = free_reduce(std::move(relator));
  if (reduced.empty()) return false;
  relators_.push_back(std::move(reduced));
  return true;
}

bool Presentation::add_equation(const FreeWord& lhs, const FreeWord& rhs) {
  auto w = lhs;
  const auto inv = inverse(rhs);
  w.insert(w.end(), inv.begin(), inv.end());
  return add_relator(std::move(w));
}

bool same_relators(const Presentation& a, const Presentation& b) {
  if (a.generators() != b.generators()) return false;
  auto canon = [](const Presentation& p) {
    std::vector<FreeWord> out;
    for (const auto& r : p.relators()) out.push_back(cyclic_canonical(r));
    std::sort(out.begin(), out.end());
    return out;
  };
  return canon(a) == canon(b);
}

namespace {

std::string gap_identifier(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (c == '{' || c == '}') continue;
    out += (c == ',') ? '_' : c;
  }
  return out;
}

std::string join_relator(const Presentation& p, const FreeWord& r, bool gap) {
  std::string out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto& name = p.generators()[static_cast<std::size_t>(std::abs(r[i]) - 1)];
    if (i) out += gap ? "*" : " ";
    out += gap ? gap_identifier(name) : name;
    if (r[i] < 0) out += "^-1";
  }
  return out;
}

}  // namespace

std::string format_presentation(const Presentation& p, PresentationFormat format) {
  std::ostringstream out;
  if (format == PresentationFormat::plain) {
    out << "generators:";
    for (const auto& g : p.generators()) out << ' ' << g;
    out << '\n';
    for (const auto& r : p.relators()) out << join_relator(p, r, false) << '\n';
    return out.str();
  }
  if (p.generators().empty()) {
    out << "F := FreeGroup(0);;\n";
  } else {
    out << "F := FreeGroup(";
    for (std::size_t i = 0; i < p.generators().size(); ++i)
      out << (i ? ", " : "") << '"' << gap_identifier(p.generators()[i]) << '"';
    out << ");;\n";
    out << "AssignGeneratorVariables(F);;\n";
  }
  out << "G := F / [";
  for (std::size_t i = 0; i < p.relators().size(); ++i)
    out << (i ? ",\n  " : "\n  ") << join_relator(p, p.relators()[i], true);
  out << (p.relators().empty() ? "];;\n" : "\n];;\n");
  return out.str();
}

Presentation parse_presentation(std::string_view text) {
  std::size_t offset = 0;
  auto next_line = [&](std::string_view& line) {
    if (offset >= text.size()) return false;
    auto end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    line = text.substr(offset, end - offset);
    offset = end + 1;
    return true;
  };
  auto tokens = [](std::string_view line) {
    std::vector<std::pair<std::string, std::size_t>> out;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      auto start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      out.emplace_back(std::string(line.substr(start, i - start)), start);
    }
    return out;
  };

  std::string_view line;
  std::size_t line_start = offset;
  if (!next_line(line) || !line.starts_with("generators:"))
    throw ParseError("expected 'generators:' header", 0);
  std::vector<std::string> names;
  for (auto& [tok, pos] : tokens(line.substr(11))) names.push_back(tok);
  Presentation p(std::move(names));

  line_start = offset;
  while (next_line(line)) {
    FreeWord r;
    for (auto& [tok, pos] : tokens(line)) {
      std::string_view name = tok;
      int sign = 1;
      if (name.ends_with("^-1")) {
        name.remove_suffix(3);
        sign = -1;
      }
      try {
        r.push_back(sign * p.index_of(name));
      } catch (const Error&) {
        throw ParseError("unknown generator '" + std::string(name) + "'", line_start + pos);
      }
    }
    if (!r.empty()) p.add_relator(std::move(r));
    line_start = offset;
  }
  return p;
}

BraidWord substitute(const FreeWord& w, std::span<const BraidWord> images) {
  if (images.empty()) throw RangeError("no generator images");
  std::vector<BraidWord> parts;
  parts.reserve(w.size() + 1);
  parts.push_back(BraidWord::identity(images.front().strands()));
  for (int x : w) {
    const auto k = static_cast<std::size_t>(std::abs(x));
    if (k == 0 || k > images.size()) throw RangeError("generator index out of range");
    parts.push_back(x > 0 ? images[k - 1] : inverse(images[k - 1]));
  }
  return concat(parts);
}

std::string pure_generator_name(int i, int j) {
  const auto e = make_edge(i, j);
  return "s_{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

namespace {

FreeWord cat(std::initializer_list<FreeWord> parts) {
  FreeWord out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Index of s_{i,j} among all pairs of [n] in lexicographic order, 1-based.
int pair_index(int n, int i, int j) {
  const auto e = make_edge(i, j);
  int idx = 0;
  for (int u = 1; u < e.u; ++u) idx += n - u;
  return idx + (e.v - e.u);
}

}  // namespace

Presentation artin_presentation(int n) {
  if (n < 2) throw RangeError("Artin presentation needs n >= 2");
  std::vector<std::string> names;
  for (int i = 1; i < n; ++i) names.push_back("sigma_{" + std::to_string(i) + "}");
  Presentation p(std::move(names));
  for (int i = 1; i + 1 < n; ++i) p.add_equation({i, i + 1, i}, {i + 1, i, i + 1});
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j) p.add_equation({i, j}, {j, i});
  return p;
}

Presentation markoff_presentation(int n) {
  if (n < 2) throw RangeError("Markoff presentation needs n >= 2");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) names.push_back(pure_generator_name(i, j));
  Presentation p(std::move(names));
  auto s = [n](int i, int j) { return pair_index(n, i, j); };

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          p.add_equation({s(i, j), s(k, l)}, {s(k, l), s(i, j)});
          p.add_equation({s(i, l), s(j, k)}, {s(j, k), s(i, l)});
        }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        p.add_equation({s(i, j), s(i, k), s(j, k)}, {s(i, k), s(j, k), s(i, j)});
        p.add_equation({s(i, k), s(j, k), s(i, j)}, {s(j, k), s(i, j), s(i, k)});
      }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          p.add_equation({s(i, k), s(j, k), s(j, l), -s(j, k)},
                         {s(j, k), s(j, l), -s(j, k), s(i, k)});
  return p;
}

Presentation pure_chromatic_presentation(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::string> names;
  for (auto e : g.edges()) names.push_back(pure_generator_name(e.u, e.v));
  Presentation p(std::move(names));

  // s_{i,j} for a non-edge is trivial in P(Gamma).
  auto s = [&](int i, int j) -> FreeWord {
    if (auto idx = g.edge_index(i, j)) return {static_cast<int>(*idx) + 1};
    return {};
  };
  auto si = [&](int i, int j) -> FreeWord { return inverse(s(i, j)); };
  auto edge = [&](int i, int j) { return g.has_edge(i, j); };

  std::set<FreeWord> seen;
  auto emit = [&](const FreeWord& lhs, const FreeWord& rhs) {
    auto r = cat({lhs, inverse(rhs)});
    auto key = cyclic_canonical(r);
    if (key.empty() || !seen.insert(key).second) return;
    p.add_relator(std::move(r));
  };

  // (1): disjoint or nested edge pairs.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          if (edge(i, j) && edge(k, l)) emit(cat({s(i, j), s(k, l)}), cat({s(k, l), s(i, j)}));
          if (edge(i, l) && edge(j, k)) emit(cat({s(i, l), s(j, k)}), cat({s(j, k), s(i, l)}));
        }
  // (2_1): 3-circuits.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        if (!is_3_circuit(g, i, j, k)) continue;
        emit(cat({s(i, j), s(i, k), s(j, k)}), cat({s(i, k), s(j, k), s(i, j)}));
        emit(cat({s(i, k), s(j, k), s(i, j)}), cat({s(j, k), s(i, j), s(i, k)}));
      }
  // (2_2): two edges through j whose far ends are not adjacent, any order.
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i)
      for (int k = i + 1; k <= n; ++k) {
        if (i == j || k == j) continue;
        if (edge(i, j) && edge(j, k) && !edge(i, k))
          emit(cat({s(i, j), s(j, k)}), cat({s(j, k), s(i, j)}));
      }
  // (3_1) / (3_2): crossing edge pairs ik, jl with i < j < k < l.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          if (!edge(i, k) || !edge(j, l)) continue;
          if (is_3_circuit(g, j, k, l))
            emit(cat({s(i, k), s(j, k), s(j, l), si(j, k)}), cat({s(j, k), s(j, l), si(j, k), s(i, k)}));
          else
            emit(cat({s(i, k), s(j, l)}), cat({s(j, l), s(i, k)}));
        }
  return p;
}

Presentation dihedral_presentation(int n) {
  if (n < 3) throw RangeError("dihedral presentation needs n >= 3");
  Presentation p({"a", "b"});
  p.add_relator(FreeWord(static_cast<std::size_t>(n), 1));
  p.add_relator({2, 2});
  p.add_relator({2, 1, 2, 1});
  return p;
}

Presentation edge_abelian_presentation(const SimpleGraph& g) {
  std::vector<std::string> names;
  for (auto e : g.edges()) names.push_back(pure_generator_name(e.u, e.v));
  Presentation p(std::move(names));
  const auto m = static_cast<int>(g.edge_count());
  for (int x = 1; x <= m; ++x)
    for (int y = x + 1; y <= m; ++y) p.add_relator(commutator(x, y));
  return p;
}

Presentation extension_presentation(const Presentation& a, const Presentation& g,
                                    const ExtensionData& data) {
  const auto s_count = static_cast<int>(a.generator_count());
  const auto t_count = static_cast<int>(g.generator_count());
  auto names = a.generators();
  for (const auto& t : g.generators()) names.push_back("psi_{" + t + "}");
  Presentation e(std::move(names));

  for (const auto& r : a.relators()) e.add_relator(r);
  for (int t = 1; t <= t_count; ++t)
    for (int s = 1; s <= s_count; ++s) {
      auto it = data.action.find({t, s});
      if (it == data.action.end())
        throw Error("missing action of " + g.generators()[static_cast<std::size_t>(t - 1)] + " on " +
                    a.generators()[static_cast<std::size_t>(s - 1)]);
      e.add_equation({-(s_count + t), s, s_count + t}, it->second);
    }
  if (data.lifted_relators.size() != g.relators().size())
    throw Error("need one lifted word per relator of the quotient");
  for (std::size_t q = 0; q < g.relators().size(); ++q) {
    FreeWord lifted;
    for (int x : g.relators()[q]) lifted.push_back(x > 0 ? x + s_count : x - s_count);
    e.add_equation(lifted, data.lifted_relators[q]);
  }
  return e;
}

std::vector<ConjugationEntry> cyclic_conjugation_table(int n) {
  if (n < 4) throw RangeError("conjugation table needs n >= 4");
  const auto [a, b] = dihedral_generators(n);
  std::vector<ConjugationEntry> rows;
  for (int i = 1; i < n - 1; ++i) rows.push_back({'a', make_edge(i, i + 1), make_edge(a(i), a(i + 1))});
  rows.push_back({'a', make_edge(1, n), make_edge(a(n), a(1))});
  rows.push_back({'a', make_edge(n - 1, n), make_edge(a(n), a(n - 1))});
  for (int i = 2; i <= n - 1; ++i) rows.push_back({'b', make_edge(i, i + 1), make_edge(b(i + 1), b(i))});
  rows.push_back({'b', make_edge(1, 2), make_edge(b(1), b(2))});
  rows.push_back({'b', make_edge(1, n), make_edge(b(1), b(n))});
  return rows;
}

CyclicClosedForms cyclic_closed_forms(int n) {
  if (n < 4) throw RangeError("closed forms need n >= 4");
  CyclicClosedForms f;
  f.psi_a_power.push_back(make_edge(1, n));
  for (int i = n - 1; i >= 1; --i) f.psi_a_power.push_back(make_edge(i, i + 1));
  const int k = n / 2;
  if (n % 2 == 0) {
    f.psi_b_psi_a_square = {make_edge(1, 2), make_edge((n + 2) / 2, (n + 4) / 2)};
    f.psi_a_psi_b_square = {make_edge(1, 2 * k), make_edge(k, k + 1)};
  } else {
    f.psi_b_square = {make_edge((n + 1) / 2, (n + 3) / 2)};
    f.psi_b_psi_a_square = {make_edge(1, 2), make_edge((n + 1) / 2, (n + 3) / 2),
                            make_edge((n + 3) / 2, (n + 5) / 2)};
    f.psi_a_psi_b_square = {make_edge(1, 2 * k + 1), make_edge(k, k + 1), make_edge(k + 1, k + 2)};
  }
  return f;
}

Presentation cyclic_braid_presentation(int n) {
  if (n < 4) throw RangeError("cyclic braid presentation needs n >= 4 (C_3 is a 3-circuit)");
  const auto graph = cycle(n);
  const auto abelian = edge_abelian_presentation(graph);
  auto names = abelian.generators();
  names.push_back("psi_{a}");
  names.push_back("psi_{b}");
  Presentation out(std::move(names));
  for (const auto& r : abelian.relators()) out.add_relator(r);

  const int m = static_cast<int>(graph.edge_count());
  const int pa = m + 1;
  const int pb = m + 2;
  auto s = [&](Edge e) { return static_cast<int>(*graph.edge_index(e.u, e.v)) + 1; };
  auto product = [&](const std::vector<Edge>& edges) {
    FreeWord w;
    for (auto e : edges) w.push_back(s(e));
    return w;
  };

  for (const auto& row : cyclic_conjugation_table(n)) {
    const int t = row.generator == 'a' ? pa : pb;
    out.add_equation({-t, s(row.source), t}, {s(row.target)});
  }
  const auto forms = cyclic_closed_forms(n);
  out.add_equation(FreeWord(static_cast<std::size_t>(n), pa), product(forms.psi_a_power));
  out.add_equation({pb, pb}, product(forms.psi_b_square));
  out.add_equation({pb, pa, pb, pa}, product(forms.psi_b_psi_a_square));
  return out;
}

}  // namespace ccb
