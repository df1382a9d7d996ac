#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pcolor/graph.hpp"

namespace pcolor {

/// layers[j] holds the vertices at distance j from the root, ascending.
struct LayerDecomposition {
  Vertex root = 0;
  std::vector<std::vector<Vertex>> layers;
  std::vector<std::size_t> layer_of;  // indexed by vertex
};

/// Breadth-first layering. Throws GraphDisconnected, VertexOutOfRange.
LayerDecomposition bfs_layers(const Graph& g, Vertex root);

struct SubgraphColoring {
  EdgeColoring coloring;
  /// |e1 ∩ e2|; the palette is shared + 4.
  std::size_t shared = 0;
};

/// Coloring from two connected spanning subgraphs (V, e1) and (V, e2):
///   - shared edges, in lexicographic order, get 5, 6, ..., 4 + t;
///   - other e1 edges between layers j and j + 1 of the e1 layering from
///     `root` get 2 for even j and 1 for odd j, e1 edges inside a layer get 1;
///   - other e2 edges likewise with 4 / 3 on the e2 layering, 3 inside;
///   - everything else gets 1.
/// Throws EdgeNotInGraph, NotSpanning (some vertex touches no edge of the
/// subgraph), SubgraphDisconnected, VertexOutOfRange.
SubgraphColoring color_via_two_subgraphs(const Graph& g,
                                         const std::vector<Edge>& e1,
                                         const std::vector<Edge>& e2,
                                         Vertex root = 0);

/// Two edge-disjoint spanning trees, each as a lexicographically sorted edge
/// list, or nullopt when none exist. Edges are offered in lexicographic order
/// to a matroid-partition augmentation: an edge that closes a cycle in one
/// forest may displace a cycle edge into the other forest, along a shortest
/// chain of such exchanges. The result is exact: nullopt means the graph has
/// no such pair. n <= 1 yields two empty trees.
std::optional<std::pair<std::vector<Edge>, std::vector<Edge>>>
find_two_edge_disjoint_spanning_trees(const Graph& g);

/// Tree finder followed by color_via_two_subgraphs with t = 0 (palette 4).
std::optional<EdgeColoring> pc_upper_via_trees(const Graph& g, Vertex root = 0);

}  // namespace pcolor
