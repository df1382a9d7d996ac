#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pcolor/graph.hpp"

namespace pcolor {

/// Vertex sequence v0..vl. A certificate is valid when it is vertex-simple,
/// consecutive vertices are adjacent and consecutive edges differ in color.
using Path = std::vector<Vertex>;

struct ConnectivityReport {
  bool properly_connected = true;
  /// Unordered pairs {u,v} (u < v) without a proper path, lexicographic.
  std::vector<Edge> failing_pairs;
  std::size_t pair_count_checked = 0;
  /// Filled only when certificates are requested.
  std::vector<std::pair<Edge, Path>> certificates;

  friend bool operator==(const ConnectivityReport&,
                         const ConnectivityReport&) = default;
};

struct VerifyOptions {
  /// Stop at the first failing pair (pairs visited lexicographically).
  bool early_exit = true;
  bool certificates = false;
  /// Worker threads over source vertices; only used when early_exit is off.
  unsigned threads = 1;
};

/// Length-0 and length-1 paths are proper. Out-of-range vertices, repeated
/// vertices and non-edges all yield false.
bool is_proper_path(const Graph& g, const EdgeColoring& c, const Path& path);

/// Vertices reachable from u by a walk whose consecutive edges differ in
/// color (u included), ascending. Superset of proper-path reachability.
std::vector<Vertex> proper_walk_reachable(const Graph& g, const EdgeColoring& c,
                                          Vertex u);

/// Exact proper-path decision for u != v with a certificate.
std::optional<Path> proper_path_exists(const Graph& g, const EdgeColoring& c,
                                       Vertex u, Vertex v);

/// The exact decision procedure on its own, without the walk-trace shortcut:
/// a perfect-matching gadget in which every proper u-v path corresponds to
/// an augmenting path between u and v (Edmonds' blossom search).
std::optional<Path> proper_path_by_matching(const Graph& g,
                                            const EdgeColoring& c, Vertex u,
                                            Vertex v);

/// Reference enumeration of simple u-v paths with color-repeat pruning.
/// Exponential; intended for n <= 12.
std::optional<Path> brute_force_proper_path(const Graph& g,
                                            const EdgeColoring& c, Vertex u,
                                            Vertex v);

/// Checks every pair of distinct vertices.
ConnectivityReport is_properly_connected(const Graph& g, const EdgeColoring& c,
                                         const VerifyOptions& options = {});

/// Checks only the listed pairs, reported in the given order.
ConnectivityReport check_pairs(const Graph& g, const EdgeColoring& c,
                               const std::vector<Edge>& pairs,
                               bool certificates = false);

}  // namespace pcolor
