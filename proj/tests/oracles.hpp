#pragma once

// Slow reference implementations used as test oracles. They share no code
// with the library beyond the Graph container and walk explicit edge lists.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "pcolor/graph.hpp"
#include "pcolor/rng.hpp"

namespace oracle {

using pcolor::Color;
using pcolor::Edge;
using pcolor::Graph;
using pcolor::Vertex;

struct Arc {
  Vertex to;
  std::size_t edge;
};

inline std::vector<std::vector<Arc>> arcs(const Graph& g) {
  std::vector<std::vector<Arc>> out(g.vertex_count());
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out[edges[i].u].push_back({edges[i].v, i});
    out[edges[i].v].push_back({edges[i].u, i});
  }
  return out;
}

// Depth-first enumeration of simple paths from u, pruned on repeated colors.
inline bool proper_path(const Graph& g, const std::vector<Color>& colors,
                        Vertex u, Vertex v) {
  if (u == v) return true;
  const auto adj = arcs(g);
  std::vector<char> on_path(g.vertex_count(), 0);
  std::function<bool(Vertex, Color)> dfs = [&](Vertex x, Color last) {
    if (x == v) return true;
    on_path[x] = 1;
    for (const Arc& a : adj[x]) {
      if (on_path[a.to] || colors[a.edge] == last) continue;
      if (dfs(a.to, colors[a.edge])) return true;
    }
    on_path[x] = 0;
    return false;
  };
  return dfs(u, 0);
}

inline bool properly_connected(const Graph& g,
                               const std::vector<Color>& colors) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!proper_path(g, colors, u, v)) return false;
  return true;
}

// Path check on raw vertex lists: simple, uses graph edges, colors alternate.
inline bool valid_proper_path(const Graph& g, const std::vector<Color>& colors,
                              const std::vector<Vertex>& path) {
  if (path.empty()) return false;
  std::vector<Vertex> sorted = path;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  const auto edges = g.edges();
  Color last = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Edge want(path[i], path[i + 1]);
    const auto it = std::find(edges.begin(), edges.end(), want);
    if (it == edges.end()) return false;
    const Color c = colors[static_cast<std::size_t>(it - edges.begin())];
    if (c == last) return false;
    last = c;
  }
  return true;
}

// Smallest k admitting a proper-path coloring, by enumerating every k-coloring
// with the first edge pinned to color 1. Only for tiny graphs.
inline Color exhaustive_pc(const Graph& g) {
  const std::size_t m = g.edge_count();
  if (m == 0) return 0;
  for (Color k = 1;; ++k) {
    std::vector<Color> colors(m, 1);
    while (true) {
      if (properly_connected(g, colors)) return k;
      std::size_t i = 1;
      while (i < m && colors[i] == k) colors[i++] = 1;
      if (i >= m) break;
      ++colors[i];
    }
  }
}

inline bool has_hamiltonian_path(const Graph& g) {
  std::vector<Vertex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), Vertex{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i + 1 < order.size(); ++i)
      ok = g.has_edge(order[i], order[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

inline bool connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  const auto adj = arcs(g);
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (const Arc& a : adj[x])
      if (!seen[a.to]) {
        seen[a.to] = 1;
        ++count;
        stack.push_back(a.to);
      }
  }
  return count == n;
}

// Every labeled graph on n vertices, one per subset of the vertex pairs.
inline std::vector<Graph> labeled_graphs(std::size_t n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size());
       ++mask) {
    std::vector<Edge> chosen;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) chosen.push_back(pairs[i]);
    out.push_back(Graph::from_edges(n, chosen));
  }
  return out;
}

inline std::vector<Graph> connected_labeled_graphs(std::size_t n) {
  std::vector<Graph> out;
  for (Graph& g : labeled_graphs(n))
    if (connected(g)) out.push_back(std::move(g));
  return out;
}

inline std::vector<Color> random_colors(std::size_t m, Color k,
                                        pcolor::SplitMix64& rng) {
  std::vector<Color> out(m);
  for (Color& c : out) c = static_cast<Color>(rng.below(k)) + 1;
  return out;
}

}  // namespace oracle
