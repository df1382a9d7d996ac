#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "pcolor/rng.hpp"

namespace pcolor {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Color = std::uint32_t;

/// Unordered vertex pair stored as (min, max).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) noexcept
      : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr auto operator<=>(const Edge&) const = default;
};

/// Undirected simple graph on vertices 0..n-1 in compressed adjacency form.
///
/// Edges are kept sorted lexicographically; an edge's position in that order
/// is its EdgeId, which is what colorings are indexed by. Neighbor lists are
/// sorted and carry the id of the connecting edge alongside each neighbor.
/// Instances are immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Builds a graph from an arbitrary-order edge list. Throws
  /// Error{VertexOutOfRange | SelfLoop | DuplicateEdge}.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  static Graph complete(std::size_t n);
  static Graph path(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph star(std::size_t leaves);
  static Graph hypercube(unsigned dimension);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[id]; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  /// Edge ids parallel to neighbors(v).
  std::span<const EdgeId> incident_edges(Vertex v) const noexcept {
    return {incident_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const noexcept {
    return offsets_[v + 1] - offsets_[v];
  }
  std::size_t max_degree() const noexcept;

  std::optional<EdgeId> edge_id(Vertex a, Vertex b) const noexcept;
  bool has_edge(Vertex a, Vertex b) const noexcept {
    return edge_id(a, b).has_value();
  }

  bool is_complete() const noexcept {
    return edge_count() == n_ * (n_ == 0 ? 0 : n_ - 1) / 2;
  }

  /// Copy with one extra edge; throws DuplicateEdge if already present.
  Graph with_edge(Edge e) const;

  /// Spanning subgraph on the same vertex set containing `subset` (which
  /// must consist of edges of this graph).
  Graph spanning_subgraph(std::span<const Edge> subset) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
  std::vector<EdgeId> incident_;
};

/// Total edge coloring c : E -> {1..k} of a specific graph, indexed by EdgeId.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  /// All edges start at color 1.
  EdgeColoring(std::size_t edge_count, Color palette_size);
  /// Throws ColorOutOfRange if any color lies outside 1..palette_size.
  EdgeColoring(std::vector<Color> colors, Color palette_size);

  Color palette_size() const noexcept { return palette_; }
  std::size_t size() const noexcept { return colors_.size(); }
  Color operator[](EdgeId id) const { return colors_[id]; }
  void set(EdgeId id, Color c);
  std::span<const Color> colors() const noexcept { return colors_; }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::vector<Color> colors_;
  Color palette_ = 1;
};

/// Parameters of G(n, p): every one of the C(n,2) pairs, visited in
/// lexicographic order, is an edge independently with probability p.
struct RandomModel {
  std::size_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

enum class SamplerPath {
  Automatic,  ///< geometric skipping when p < 0.2, per-pair Bernoulli otherwise
  GeometricSkip,
  Bernoulli,
};

/// Samples G(n, p) from SplitMix64(seed).
///
/// Bernoulli path: for each pair in lexicographic order draw u = uniform()
/// and keep the pair iff u < p. Skip path: starting before the first pair,
/// repeatedly draw u = uniform() and advance 1 + floor(log(1-u)/log(1-p))
/// pairs, keeping the pair landed on. The two paths agree in distribution
/// but not sample-by-sample.
Graph gnp_sample(const RandomModel& model,
                 SamplerPath path = SamplerPath::Automatic);

bool is_connected(const Graph& g);

/// Component index per vertex; components are numbered by smallest member.
std::vector<std::uint32_t> component_labels(const Graph& g);

inline constexpr std::size_t kInfiniteDistance =
    std::numeric_limits<std::size_t>::max();

/// Breadth-first distances from `source`; kInfiniteDistance if unreachable.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);

/// Largest pairwise distance; kInfiniteDistance when disconnected, 0 if n <= 1.
std::size_t diameter(const Graph& g);

/// Cut vertices, ascending.
std::vector<Vertex> articulation_points(const Graph& g);

/// n >= 3, connected and without cut vertices.
bool is_2_connected(const Graph& g);

}  // namespace pcolor
