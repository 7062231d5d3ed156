#include "ccbraid/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "ccbraid/braid_word.hpp"
#include "ccbraid/error.hpp"

namespace ccb {

namespace {

std::size_t slot(int n, int i, int j) {
  return static_cast<std::size_t>((i - 1) * n + (j - 1));
}

void check_vertex(int n, int v) {
  if (v < 1 || v > n)
    throw RangeError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
}

}  // namespace

Edge make_edge(int i, int j) {
  if (i == j) throw RangeError("loop edge at vertex " + std::to_string(i));
  return i < j ? Edge{i, j} : Edge{j, i};
}

SimpleGraph::SimpleGraph(int n, const std::vector<std::pair<int, int>>& pairs)
    : n_(n), adjacency_(static_cast<std::size_t>(n > 0 ? n * n : 0), false) {
  if (n < 1) throw RangeError("graph needs at least one vertex");
  for (auto [i, j] : pairs) {
    check_vertex(n, i);
    check_vertex(n, j);
    edges_.push_back(make_edge(i, j));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto e : edges_) {
    adjacency_[slot(n, e.u, e.v)] = true;
    adjacency_[slot(n, e.v, e.u)] = true;
  }
}

bool SimpleGraph::has_edge(int i, int j) const {
  check_vertex(n_, i);
  check_vertex(n_, j);
  return adjacency_[slot(n_, i, j)];
}

std::optional<std::size_t> SimpleGraph::edge_index(int i, int j) const {
  if (i == j || !has_edge(i, j)) return std::nullopt;
  const auto e = make_edge(i, j);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  return static_cast<std::size_t>(it - edges_.begin());
}

int SimpleGraph::degree(int v) const {
  check_vertex(n_, v);
  int d = 0;
  for (int w = 1; w <= n_; ++w) d += adjacency_[slot(n_, v, w)] ? 1 : 0;
  return d;
}

SimpleGraph cycle(int n) {
  if (n < 3) throw RangeError("cycle graph needs n >= 3");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i) pairs.emplace_back(i, i + 1);
  pairs.emplace_back(1, n);
  return SimpleGraph(n, pairs);
}

SimpleGraph complete(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  return SimpleGraph(n, pairs);
}

SimpleGraph path(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i) pairs.emplace_back(i, i + 1);
  return SimpleGraph(n, pairs);
}

SimpleGraph star(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 2; i <= n; ++i) pairs.emplace_back(1, i);
  return SimpleGraph(n, pairs);
}

SimpleGraph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
  return SimpleGraph(n, pairs);
}

SimpleGraph read_graph(std::istream& in) {
  long long n = 0, m = 0;
  if (!(in >> n >> m)) throw ParseError("expected header 'n m'", 0);
  if (n < 1 || m < 0) throw ParseError("invalid header", 0);
  std::vector<std::pair<int, int>> pairs;
  for (long long e = 0; e < m; ++e) {
    long long i = 0, j = 0;
    if (!(in >> i >> j))
      throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(e),
                       static_cast<std::size_t>(e + 1));
    pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  std::string trailing;
  if (in >> trailing) throw ParseError("trailing data '" + trailing + "'", static_cast<std::size_t>(m + 1));
  return SimpleGraph(static_cast<int>(n), pairs);
}

std::string write_graph(const SimpleGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

SimpleGraph parse_graph_spec(std::string_view spec) {
  if (spec.starts_with('@')) {
    std::ifstream in{std::string(spec.substr(1))};
    if (!in) throw Error("cannot open graph file '" + std::string(spec.substr(1)) + "'");
    return read_graph(in);
  }
  const auto colon = spec.find(':');
  if (colon != std::string_view::npos) {
    const auto name = spec.substr(0, colon);
    const auto arg = spec.substr(colon + 1);
    int n = 0;
    auto [end, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
    const bool numeric = ec == std::errc{} && end == arg.data() + arg.size();
    if (numeric) {
      if (name == "cycle") return cycle(n);
      if (name == "complete") return complete(n);
      if (name == "path") return path(n);
      if (name == "star") return star(n);
    }
  }
  std::ifstream in{std::string(spec)};
  if (!in) throw ParseError("unrecognised graph spec '" + std::string(spec) + "'", 0);
  return read_graph(in);
}

bool is_automorphism(const SimpleGraph& g, const Permutation& p) {
  if (p.size() != g.vertex_count()) return false;
  // A bijection mapping edges to edges maps non-edges to non-edges too.
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return g.has_edge(p(e.u), p(e.v)); });
}

std::vector<Permutation> automorphisms(const SimpleGraph& g, int max_vertices) {
  const int n = g.vertex_count();
  if (n > max_vertices)
    throw RangeError("automorphism search limited to " + std::to_string(max_vertices) +
                     " vertices, graph has " + std::to_string(n));
  std::vector<int> degree(static_cast<std::size_t>(n) + 1);
  for (int v = 1; v <= n; ++v) degree[static_cast<std::size_t>(v)] = g.degree(v);

  std::vector<Permutation> found;
  std::vector<int> image(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);

  // Assign images to vertices 1, 2, ... in order; candidates are tried in
  // increasing order, so results come out lexicographically sorted.
  auto extend = [&](auto&& self, int v) -> void {
    if (v > n) {
      found.emplace_back(image);
      return;
    }
    for (int c = 1; c <= n; ++c) {
      if (used[static_cast<std::size_t>(c)] ||
          degree[static_cast<std::size_t>(c)] != degree[static_cast<std::size_t>(v)])
        continue;
      bool compatible = true;
      for (int w = 1; w < v && compatible; ++w)
        compatible = g.has_edge(v, w) == g.has_edge(c, image[static_cast<std::size_t>(w - 1)]);
      if (!compatible) continue;
      image[static_cast<std::size_t>(v - 1)] = c;
      used[static_cast<std::size_t>(c)] = true;
      self(self, v + 1);
      used[static_cast<std::size_t>(c)] = false;
    }
  };
  extend(extend, 1);
  return found;
}

bool is_3_circuit(const SimpleGraph& g, int i, int j, int k) {
  if (i == j || j == k || i == k) throw RangeError("3-circuit needs distinct vertices");
  return g.has_edge(i, j) && g.has_edge(i, k) && g.has_edge(j, k);
}

bool is_triangle_free(const SimpleGraph& g) {
  for (auto e : g.edges())
    for (int k = e.v + 1; k <= g.vertex_count(); ++k)
      if (g.has_edge(e.u, k) && g.has_edge(e.v, k)) return false;
  return true;
}

bool is_complete(const SimpleGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  return g.edge_count() == n * (n - 1) / 2;
}

bool is_cycle(const SimpleGraph& g) {
  return g.vertex_count() >= 3 && g == cycle(g.vertex_count());
}

DihedralElement::DihedralElement(int n, int rotation, bool reflected)
    : n_(n), rotation_(0), reflected_(reflected) {
  if (n < 1) throw RangeError("dihedral group needs n >= 1");
  rotation_ = ((rotation % n) + n) % n;
}

std::vector<DihedralElement> DihedralElement::all(int n) {
  std::vector<DihedralElement> out;
  for (int r = 0; r < 2; ++r)
    for (int k = 0; k < n; ++k) out.emplace_back(n, k, r == 1);
  return out;
}

DihedralElement DihedralElement::from_permutation(const Permutation& p) {
  for (const auto& g : all(p.size()))
    if (g.to_permutation() == p) return g;
  throw NotAutomorphismError("permutation " + p.cycle_notation() + " is not dihedral");
}

DihedralElement DihedralElement::inverse() const {
  // (a^k b)^{-1} = a^k b.
  return reflected_ ? *this : DihedralElement(n_, -rotation_, false);
}

Permutation DihedralElement::to_permutation() const {
  std::vector<int> img(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i) {
    int x = (i - 1 + rotation_) % n_ + 1;
    if (reflected_) x = x == 1 ? 1 : n_ + 2 - x;
    img[static_cast<std::size_t>(i - 1)] = x;
  }
  return Permutation(std::move(img));
}

std::string DihedralElement::to_string() const {
  if (is_identity()) return "e";
  std::string s;
  if (rotation_ == 1) s = "a";
  else if (rotation_ > 1) s = "a^" + std::to_string(rotation_);
  if (reflected_) s += "b";
  return s;
}

DihedralElement operator*(const DihedralElement& x, const DihedralElement& y) {
  if (x.n_ != y.n_) throw MismatchError("dihedral groups of different order");
  // b a^m = a^{-m} b
  const int rot = x.rotation_ + (x.reflected_ ? -y.rotation_ : y.rotation_);
  return DihedralElement(x.n_, rot, x.reflected_ != y.reflected_);
}

std::pair<Permutation, Permutation> dihedral_generators(int n) {
  if (n < 3) throw RangeError("dihedral generators need n >= 3");
  std::vector<int> points(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) points[static_cast<std::size_t>(i - 1)] = i;
  auto a = Permutation::cycle(n, points);
  auto b = Permutation::identity(n);
  for (int k = 2; k <= reflection_last(n); ++k)
    b = compose(b, Permutation::transposition(n, k, n + 2 - k));
  return {std::move(a), std::move(b)};
}

}  // namespace ccb
