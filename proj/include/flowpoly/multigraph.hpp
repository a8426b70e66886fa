#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace flowpoly {

using Vertex = std::uint32_t;

/// One parallel class of non-loop edges, u < v.
struct EdgeClass {
  Vertex u = 0;
  Vertex v = 0;
  std::uint32_t mult = 0;
  friend bool operator==(const EdgeClass&, const EdgeClass&) = default;
};

/// Addresses one copy of an edge: the unordered endpoint pair plus the index
/// of the copy inside its parallel class (or among the loops when u == v).
struct EdgeRef {
  Vertex u = 0;
  Vertex v = 0;
  std::uint32_t instance = 0;
  [[nodiscard]] bool is_loop() const noexcept { return u == v; }
  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// Labeled multigraph with parallel-edge multiplicities and per-vertex loop
/// counts. Values are immutable once built; the local operations below return
/// new graphs.
class Multigraph {
 public:
  /// Construction record: u == v means `count` loops at u.
  struct Triple {
    Vertex u = 0;
    Vertex v = 0;
    std::uint32_t count = 1;
  };

  struct Neighbor {
    Vertex vertex = 0;
    std::uint32_t mult = 0;
  };

  Multigraph() = default;
  explicit Multigraph(std::size_t n);
  /// Repeated pairs are merged. Throws InvalidEdge on out-of-range vertices.
  Multigraph(std::size_t n, std::span<const Triple> edges);
  Multigraph(std::size_t n, std::initializer_list<Triple> edges);

  [[nodiscard]] std::size_t order() const noexcept { return n_; }
  /// Total edge count m: parallel copies plus loops.
  [[nodiscard]] std::size_t size() const noexcept { return m_; }
  [[nodiscard]] std::uint32_t loops(Vertex v) const;
  [[nodiscard]] std::uint32_t total_loops() const noexcept;
  [[nodiscard]] std::uint32_t multiplicity(Vertex u, Vertex v) const;
  /// Non-loop multiplicities plus twice the loops.
  [[nodiscard]] std::uint32_t degree(Vertex v) const;
  [[nodiscard]] std::span<const EdgeClass> classes() const noexcept { return classes_; }
  /// Non-loop neighbors of v with multiplicities, sorted by vertex.
  [[nodiscard]] std::span<const Neighbor> neighbors(Vertex v) const;
  [[nodiscard]] bool has_edge(const EdgeRef& e) const;
  /// One EdgeRef per edge copy, loops included, in a fixed order.
  [[nodiscard]] std::vector<EdgeRef> edge_list() const;
  /// The class list back as construction triples (loops included).
  [[nodiscard]] std::vector<Triple> triples() const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.n_ == b.n_ && a.loops_ == b.loops_ && a.classes_ == b.classes_;
  }

 private:
  void build(std::span<const Triple> edges);

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint32_t> loops_;
  std::vector<EdgeClass> classes_;
  std::vector<std::vector<Neighbor>> adj_;
  std::vector<std::uint32_t> degree_;
};

/// An edge cut of size 1..3, always a union of whole parallel classes.
struct CutSet {
  std::vector<EdgeRef> edges;
  /// The side of G - cut containing the lowest-numbered vertex.
  std::vector<Vertex> side;
  [[nodiscard]] std::size_t size() const noexcept { return edges.size(); }
};

// ------------------------------------------------------------ local operations

Multigraph delete_edge(const Multigraph& g, const EdgeRef& e);
/// Merges the endpoints of e; other copies of e become loops. Vertices above
/// max(u, v) shift down by one, the merged vertex keeps the index min(u, v).
Multigraph contract_edge(const Multigraph& g, const EdgeRef& e);
/// Removes u (degree 2, no loop) and joins its two neighbors; vertices above u
/// shift down by one.
Multigraph desubdivide(const Multigraph& g, Vertex u);
/// Inserts a new vertex (index n) in the middle of edge e.
Multigraph subdivide(const Multigraph& g, const EdgeRef& e);
Multigraph remove_loops(const Multigraph& g);
/// Subgraph induced by `vertices`, relabeled in the given order.
Multigraph induced_subgraph(const Multigraph& g, std::span<const Vertex> vertices);
Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);
/// Relabels vertex v to perm[v].
Multigraph permute(const Multigraph& g, std::span<const Vertex> perm);

// ------------------------------------------------------------ structure queries

/// component[v] = index of v's component, numbered by lowest vertex.
std::vector<std::uint32_t> component_labels(const Multigraph& g);
std::vector<std::vector<Vertex>> components(const Multigraph& g);
bool is_connected(const Multigraph& g);

/// Parallel classes of multiplicity 1 whose removal disconnects their component.
std::vector<EdgeClass> bridges(const Multigraph& g);
bool is_bridgeless(const Multigraph& g);

/// Number of blocks of a connected graph. Each loop is a block of its own.
/// Throws DomainError on disconnected input.
std::size_t blocks(const Multigraph& g);

/// All minimal edge cuts with at most max_size edges (max_size in {1, 2, 3}),
/// each reported once.
std::vector<CutSet> small_edge_cuts(const Multigraph& g, std::size_t max_size);

/// True when no edge cut with fewer than k edges exists (k <= 4).
bool is_k_edge_connected(const Multigraph& g, std::size_t k);
/// Vertex 3-connectivity of the underlying simple graph (needs n >= 4).
bool is_3_connected(const Multigraph& g);

std::map<Vertex, std::uint32_t> degree_profile(const Multigraph& g);
bool is_cubic(const Multigraph& g);
bool is_simple(const Multigraph& g);
/// The vertex x such that every other vertex has degree 3; for a cubic graph
/// vertex 0.
std::optional<Vertex> near_cubic_center(const Multigraph& g);
std::vector<std::uint32_t> sorted_degrees(const Multigraph& g);

}  // namespace flowpoly
