#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccbraid/permutation.hpp"

namespace ccb {

/// Unordered pair of distinct vertices, stored with u < v.
struct Edge {
  int u;
  int v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Builds the canonical edge {i, j}; i and j may come in either order.
Edge make_edge(int i, int j);

/// A loopless simple graph on the vertex set {1..n}.
class SimpleGraph {
 public:
  /// Edges may be listed in any order and orientation; duplicates collapse.
  SimpleGraph(int n, const std::vector<std::pair<int, int>>& pairs);

  int vertex_count() const noexcept { return n_; }
  /// Sorted lexicographically; this order indexes edge coordinates everywhere.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_edge(int i, int j) const;
  std::optional<std::size_t> edge_index(int i, int j) const;
  int degree(int v) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<bool> adjacency_;
};

SimpleGraph cycle(int n);
SimpleGraph complete(int n);
SimpleGraph path(int n);
/// Vertex 1 joined to every other vertex.
SimpleGraph star(int n);
SimpleGraph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);

/// "n m" followed by m lines "i j".
SimpleGraph read_graph(std::istream& in);
std::string write_graph(const SimpleGraph& g);

/// "cycle:n", "complete:n", "path:n", "star:n", "@file" or a file path.
SimpleGraph parse_graph_spec(std::string_view spec);

bool is_automorphism(const SimpleGraph& g, const Permutation& p);

/// Every automorphism of g, sorted by one-line notation. Refuses graphs with
/// more than `max_vertices` vertices.
std::vector<Permutation> automorphisms(const SimpleGraph& g, int max_vertices = 10);

bool is_3_circuit(const SimpleGraph& g, int i, int j, int k);
bool is_triangle_free(const SimpleGraph& g);
bool is_complete(const SimpleGraph& g);
bool is_cycle(const SimpleGraph& g);

/// The element a^rotation b^(reflected ? 1 : 0) of the dihedral group of order 2n,
/// with a^n = b^2 = e and bab = a^{-1}.
class DihedralElement {
 public:
  DihedralElement(int n, int rotation, bool reflected);

  static DihedralElement identity(int n) { return {n, 0, false}; }
  static DihedralElement rotation_generator(int n) { return {n, 1, false}; }
  static DihedralElement reflection_generator(int n) { return {n, 0, true}; }
  /// All 2n elements, ordered by index().
  static std::vector<DihedralElement> all(int n);
  /// Inverse of to_permutation; throws unless p is in the group generated by
  /// the rotation (1 2 ... n) and the reflection fixing 1.
  static DihedralElement from_permutation(const Permutation& p);

  int order_of_rotation() const noexcept { return n_; }
  int rotation() const noexcept { return rotation_; }
  bool reflected() const noexcept { return reflected_; }
  /// rotation + n * reflected, in [0, 2n).
  std::size_t index() const noexcept {
    return static_cast<std::size_t>(rotation_ + (reflected_ ? n_ : 0));
  }
  bool is_identity() const noexcept { return rotation_ == 0 && !reflected_; }

  DihedralElement inverse() const;
  Permutation to_permutation() const;
  /// "e", "a^2", "b", "a^3b"
  std::string to_string() const;

  friend DihedralElement operator*(const DihedralElement& x, const DihedralElement& y);
  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;

 private:
  int n_;
  int rotation_;
  bool reflected_;
};

/// The rotation a = (1 2 ... n) and the reflection b = (2 n)(3 n-1)...(r(n) s(n)).
std::pair<Permutation, Permutation> dihedral_generators(int n);

}  // namespace ccb
