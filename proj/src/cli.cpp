#include "ccbraid/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <optional>
#include <ostream>

#include "ccbraid/braid_word.hpp"
#include "ccbraid/chromatic.hpp"
#include "ccbraid/error.hpp"
#include "ccbraid/extension.hpp"
#include "ccbraid/garside.hpp"
#include "ccbraid/graph.hpp"
#include "ccbraid/presentation.hpp"
#include "ccbraid/verify.hpp"

namespace ccb::cli {

namespace {

struct UsageError : Error {
  using Error::Error;
};

int parse_count(const std::string& text, const std::string& what) {
  int value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size())
    throw UsageError(what + " must be an integer, got '" + text + "'");
  return value;
}

// Strand count from -n, the graph, or both (which must then agree).
int resolve_strands(std::optional<int> strands, const std::optional<SimpleGraph>& graph) {
  if (graph) {
    if (strands && *strands != graph->vertex_count())
      throw UsageError("-n " + std::to_string(*strands) + " disagrees with the graph's " +
                       std::to_string(graph->vertex_count()) + " vertices");
    return graph->vertex_count();
  }
  if (!strands) throw UsageError("the strand count is required: pass -n or --graph");
  return *strands;
}

int cmd_aut(const std::string& spec, int max_vertices, std::ostream& out) {
  const auto g = parse_graph_spec(spec);
  const auto auts = automorphisms(g, max_vertices);
  out << auts.size() << '\n';
  for (const auto& p : auts) out << p.to_string() << '\n';
  return kExitOk;
}

int cmd_present(const std::string& kind, const std::string& target, const std::string& format,
                std::ostream& out) {
  PresentationFormat fmt;
  if (format == "plain")
    fmt = PresentationFormat::plain;
  else if (format == "gap" || format == "algebra-system")
    fmt = PresentationFormat::gap;
  else
    throw UsageError("unknown format '" + format + "'");

  Presentation p;
  if (kind == "pure")
    p = pure_chromatic_presentation(parse_graph_spec(target));
  else if (kind == "artin")
    p = artin_presentation(parse_count(target, "n"));
  else if (kind == "markoff")
    p = markoff_presentation(parse_count(target, "n"));
  else if (kind == "cyclic")
    p = cyclic_braid_presentation(parse_count(target, "n"));
  else if (kind == "dihedral")
    p = dihedral_presentation(parse_count(target, "n"));
  else
    throw UsageError("unknown presentation kind '" + kind + "'");
  out << format_presentation(p, fmt);
  return kExitOk;
}

int cmd_eq(const std::string& lhs_text, const std::string& rhs_text, std::optional<int> strands,
           const std::optional<std::string>& graph_spec, std::ostream& out) {
  std::optional<SimpleGraph> graph;
  if (graph_spec) graph = parse_graph_spec(*graph_spec);
  const int n = resolve_strands(strands, graph);
  const auto u = parse_word(lhs_text, n);
  const auto v = parse_word(rhs_text, n);

  if (!graph) {
    out << (equal_in_bn(u, v) ? "EQUAL" : "DISTINCT") << '\n';
    return equal_in_bn(u, v) ? kExitOk : kExitNegative;
  }
  const ChromaticQuotient quotient(*graph);
  const bool equal = quotient.equal(u, v);
  out << (equal ? "EQUAL" : "DISTINCT") << '\n';
  if (quotient.triangle_free()) {
    out << "lhs " << quotient.i_star(u).to_string() << '\n';
    out << "rhs " << quotient.i_star(v).to_string() << '\n';
  } else {
    out << "lhs " << normal_form(u).to_string() << '\n';
    out << "rhs " << normal_form(v).to_string() << '\n';
  }
  return equal ? kExitOk : kExitNegative;
}

int cmd_invariants(const std::string& text, std::optional<int> strands,
                   const std::optional<std::string>& graph_spec, std::ostream& out) {
  std::optional<SimpleGraph> graph;
  if (graph_spec) graph = parse_graph_spec(*graph_spec);
  const int n = resolve_strands(strands, graph);
  const auto w = parse_word(text, n);
  const auto perm = perm_of(w);
  const bool pure = perm.is_identity();

  out << "permutation: " << perm.to_string() << ' ' << perm.cycle_notation() << '\n';
  out << "pure: " << (pure ? "yes" : "no") << '\n';
  out << "crossing matrix:\n";
  const auto m = crossing_matrix(w);
  for (int p = 1; p <= n; ++p) {
    for (int q = 1; q <= n; ++q) out << (q > 1 ? " " : "") << m.at(p, q);
    out << '\n';
  }
  if (graph) {
    out << "automorphism: " << (is_automorphism(*graph, perm) ? "yes" : "no") << '\n';
    if (pure) {
      const auto v = edge_lk(w, *graph);
      out << "edge vector:";
      for (std::size_t i = 0; i < graph->edges().size(); ++i) {
        const auto e = graph->edges()[i];
        out << ' ' << pure_generator_name(e.u, e.v) << '=' << v.coords[i];
      }
      out << '\n';
    }
  }
  return kExitOk;
}

int cmd_verify_all(int max_n, std::ostream& out) {
  const auto report = verify_all(max_n);
  out << report.to_string();
  out << "SUMMARY " << (report.all_pass() ? "PASS" : "FAIL") << " passed="
      << report.results().size() - report.failures() << " total=" << report.results().size() << '\n';
  return report.all_pass() ? kExitOk : kExitNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Braid groups of chromatic configuration spaces", "ccbraid"};
  app.require_subcommand(1);

  std::string graph_spec_aut;
  int max_vertices = 10;
  auto* aut = app.add_subcommand("aut", "List the automorphism group of a graph");
  aut->add_option("graph", graph_spec_aut, "cycle:n, complete:n, path:n, star:n, @file or a file path")
      ->required();
  aut->add_option("--max-vertices", max_vertices, "Refuse larger graphs")->capture_default_str();

  std::string kind, target, format = "plain";
  auto* present = app.add_subcommand("present", "Print a group presentation");
  present->add_option("kind", kind, "artin, markoff, pure, cyclic or dihedral")->required();
  present->add_option("target", target, "strand count, or a graph spec for 'pure'")->required();
  present->add_option("--format", format, "plain, or gap (alias algebra-system)")->capture_default_str();

  std::string lhs, rhs;
  std::optional<int> strands;
  std::optional<std::string> graph_spec;
  auto* eq = app.add_subcommand("eq", "Decide equality of two braid words");
  eq->add_option("lhs", lhs, "first word, e.g. \"1 -2 1\"")->required();
  eq->add_option("rhs", rhs, "second word")->required();
  eq->add_option("-n", strands, "strand count");
  eq->add_option("--graph", graph_spec, "decide in B(Gamma) instead of B_n");

  std::string word_text;
  auto* inv = app.add_subcommand("invariants", "Permutation, crossing counts and edge vector of a word");
  inv->add_option("word", word_text, "braid word")->required();
  inv->add_option("-n", strands, "strand count");
  inv->add_option("--graph", graph_spec, "graph for the edge vector");

  int max_n = 9;
  auto* verify = app.add_subcommand("verify-paper", "Check every identity of the B(Gamma) toolkit");
  verify->add_option("--max-n", max_n, "largest cycle length checked (4..12)")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*aut) return cmd_aut(graph_spec_aut, max_vertices, out);
    if (*present) return cmd_present(kind, target, format, out);
    if (*eq) return cmd_eq(lhs, rhs, strands, graph_spec, out);
    if (*inv) return cmd_invariants(word_text, strands, graph_spec, out);
    if (*verify) return cmd_verify_all(max_n, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ccb::cli
