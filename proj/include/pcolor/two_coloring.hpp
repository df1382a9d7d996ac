#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcolor/graph.hpp"
#include "pcolor/posa.hpp"

namespace pcolor {

/// Degree split at threshold tau: small means deg < tau.
struct VertexClassification {
  double beta = 0.01;
  double tau = 0.0;
  std::vector<Vertex> small;  // ascending
  std::vector<Vertex> large;  // ascending
};

/// tau = beta * ln n.
VertexClassification classify_vertices(const Graph& g, double beta = 0.01);
/// Explicit tau; beta is reported as tau / ln n (0 when n < 2).
VertexClassification classify_by_threshold(const Graph& g, double tau);

struct AttachmentPair {
  Vertex large = 0;
  Vertex small = 0;

  friend bool operator==(const AttachmentPair&,
                         const AttachmentPair&) = default;
};

struct AttachmentMatching {
  /// One pair per small vertex, in ascending order of the small vertex.
  std::vector<AttachmentPair> pairs;
  /// Present iff |V \ small| is odd. Its smaller endpoint (`excluded`) is
  /// left out of V1, the other endpoint roots an extra tree.
  std::optional<Edge> parity_edge;
  std::optional<Vertex> excluded;
  std::vector<Vertex> v1;  // ascending, even size

  /// Large partners followed by the parity root, in that order.
  std::vector<Vertex> roots() const;
};

/// Greedy attachment: small vertices in ascending order each take their
/// smallest large neighbor not used yet. Throws SmallAdjacent,
/// SharedNeighborConflict or NoParityEdge.
AttachmentMatching small_matching(const Graph& g,
                                  const VertexClassification& cls);

/// Edge colors indexed by EdgeId; 0 marks an uncolored edge.
struct PartialColoring {
  std::vector<Color> colors;

  explicit PartialColoring(std::size_t edge_count = 0)
      : colors(edge_count, 0) {}

  bool is_colored(EdgeId id) const { return colors[id] != 0; }
  /// Total coloring over palette {1, 2}, uncolored edges set to `fill`.
  EdgeColoring finish(Color fill = 1) const;
};

/// Alternates 1, 2, 1, ... around the canonical form of `cycle` (first edge
/// joins the smallest vertex to its smaller cycle neighbor) and gives every
/// matching and parity edge color 1. Throws OddCycle, EdgeNotInGraph.
PartialColoring color_cycle_and_matching(const Graph& g,
                                         const std::vector<Vertex>& cycle,
                                         const AttachmentMatching& matching);

struct TreeGrowthParams {
  unsigned arity = 2;
  unsigned depth = 1;
  double epsilon = 0.1;

  /// arity = max(2, floor(ln n / 101)),
  /// depth = max(1, floor((1/2 + epsilon) ln n / ln ln n)); depth is 1 below
  /// n = 16, where ln n / ln ln n stops being monotone.
  static TreeGrowthParams for_order(std::size_t n, double epsilon = 0.1);
  /// Throws InvalidArgument unless arity >= 2, depth >= 1, 0 < epsilon < 1.
  void validate() const;
};

/// Rooted tree stored level by level; levels[0] = {root}. parents[d][k] is
/// the parent (in levels[d-1]) of levels[d][k]; parents[0] is empty.
struct LeafTree {
  Vertex root = 0;
  std::vector<std::vector<Vertex>> levels;
  std::vector<std::vector<Vertex>> parents;

  const std::vector<Vertex>& leaves() const { return levels.back(); }
  std::vector<Edge> edges() const;
};

/// Grows vertex-disjoint `arity`-ary trees of the given depth, one per root,
/// tree by tree and level by level, inside g minus `forbidden_edges`. All
/// roots are reserved up front. Each expanding vertex scans its neighbors in
/// a seeded random order and takes the first `arity` that are in no tree.
/// Throws InsufficientNeighbors naming the root and the depth reached.
std::vector<LeafTree> grow_leaf_trees(const Graph& g,
                                      const std::vector<Edge>& forbidden_edges,
                                      const std::vector<Vertex>& roots,
                                      const TreeGrowthParams& params,
                                      std::uint64_t seed);

/// Color of tree edges joining depth d to depth d + 1.
constexpr Color tree_level_color(std::size_t d) { return d % 2 == 0 ? 2 : 1; }

struct TreeColoringResult {
  PartialColoring coloring;
  /// One link per tree pair (i < j) that has an uncolored edge between the
  /// two leaf sets: the lexicographically smallest such edge.
  std::vector<Edge> links;
  /// Tree pairs (i, j) for which no link exists.
  std::vector<std::pair<std::size_t, std::size_t>> missing;
};

/// Colors tree edges by depth (tree_level_color) and each link with the
/// color opposite to the deepest tree level. With `require_all_links` a
/// missing link throws NoLeafLink; otherwise it is reported in `missing`.
TreeColoringResult color_trees_and_links(const std::vector<LeafTree>& trees,
                                         PartialColoring coloring,
                                         const Graph& g,
                                         bool require_all_links = true);

enum class Stage { Classified, Matched, CycleFound, Colored, TreesBuilt, Verified };

const char* stage_name(Stage s);

struct ConstructionParams {
  /// Threshold coefficient: tau = beta * ln n.
  double beta = 0.01;
  /// Off: tau = max(beta ln n, min_tau). On: tau = beta ln n exactly.
  bool paper_constants = false;
  double min_tau = 3.0;
  double epsilon = 0.1;
  std::optional<unsigned> arity;  // overrides TreeGrowthParams::for_order
  std::optional<unsigned> depth;
  unsigned repair_rounds = 5;
  PosaOptions posa;
};

struct ConstructionTrace {
  bool paper_constants = false;
  VertexClassification classification;
  AttachmentMatching matching;
  std::vector<Vertex> hamiltonian_cycle;
  TreeGrowthParams tree_params;
  std::vector<LeafTree> trees;
  std::vector<Edge> leaf_link_edges;
  /// Tree index pairs whose leaf sets are not joined by any usable edge.
  std::vector<std::pair<std::size_t, std::size_t>> missing_links;
  std::vector<std::string> repair_log;
  /// Last stage completed.
  Stage stage_reached = Stage::Classified;
  /// Stage that could not be completed, if any.
  std::optional<Stage> failed_at;
  std::string failure_reason;

  bool succeeded() const { return stage_reached == Stage::Verified; }
  /// "Verified", or "Failed(<stage>)".
  std::string outcome() const;
};

struct ConstructionResult {
  /// Present only on success; palette {1, 2}, verified.
  std::optional<EdgeColoring> coloring;
  ConstructionTrace trace;
};

/// Classify, match, find a Hamiltonian cycle of G[V1], color it, grow and
/// link trees when two or more roots exist, fill the rest with color 1 and
/// verify; on failure run the bounded repair loop. Failures of a stage are
/// reported in the trace. Throws GraphDisconnected, InvalidArgument (n < 3).
ConstructionResult construct_two_coloring(const Graph& g,
                                          const ConstructionParams& params,
                                          std::uint64_t seed);

}  // namespace pcolor
