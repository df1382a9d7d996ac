#include "pcolor/subgraph_coloring.hpp"

#include <algorithm>

#include "pcolor/error.hpp"

namespace pcolor {
namespace {

std::vector<Edge> normalized(const Graph& g, const std::vector<Edge>& edges,
                             const char* name) {
  std::vector<Edge> out(edges);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (const Edge& e : out)
    if (!g.has_edge(e.u, e.v))
      throw Error(ErrorKind::EdgeNotInGraph,
                  std::string(name) + " edge {" + std::to_string(e.u) + "," +
                      std::to_string(e.v) + "} is not in the graph");
  return out;
}

LayerDecomposition layers_of_subgraph(const Graph& g,
                                      const std::vector<Edge>& edges,
                                      Vertex root, const char* name) {
  const Graph sub = g.spanning_subgraph(edges);
  if (sub.vertex_count() >= 2)
    for (Vertex v = 0; v < sub.vertex_count(); ++v)
      if (sub.degree(v) == 0)
        throw Error(ErrorKind::NotSpanning,
                    std::string(name) + " does not reach vertex " +
                        std::to_string(v));
  try {
    return bfs_layers(sub, root);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::GraphDisconnected) throw;
    throw Error(ErrorKind::SubgraphDisconnected,
                std::string(name) + " is not connected");
  }
}

}  // namespace

LayerDecomposition bfs_layers(const Graph& g, Vertex root) {
  const std::size_t n = g.vertex_count();
  if (root >= n)
    throw Error(ErrorKind::VertexOutOfRange,
                "root " + std::to_string(root) + " is outside the graph");
  const auto dist = bfs_distances(g, root);
  LayerDecomposition out;
  out.root = root;
  out.layer_of.assign(dist.begin(), dist.end());
  for (Vertex v = 0; v < n; ++v) {
    if (dist[v] == kInfiniteDistance)
      throw Error(ErrorKind::GraphDisconnected,
                  "vertex " + std::to_string(v) + " is unreachable from " +
                      std::to_string(root));
    if (dist[v] >= out.layers.size()) out.layers.resize(dist[v] + 1);
    out.layers[dist[v]].push_back(v);
  }
  return out;
}

SubgraphColoring color_via_two_subgraphs(const Graph& g,
                                         const std::vector<Edge>& e1,
                                         const std::vector<Edge>& e2,
                                         Vertex root) {
  const auto first = normalized(g, e1, "e1");
  const auto second = normalized(g, e2, "e2");
  const auto layers1 = layers_of_subgraph(g, first, root, "e1");
  const auto layers2 = layers_of_subgraph(g, second, root, "e2");

  std::vector<Edge> shared;
  std::set_intersection(first.begin(), first.end(), second.begin(),
                        second.end(), std::back_inserter(shared));

  auto layered_color = [](const LayerDecomposition& layers, Edge e,
                          Color same, Color odd_start, Color even_start) {
    const std::size_t a = layers.layer_of[e.u], b = layers.layer_of[e.v];
    if (a == b) return same;
    return std::min(a, b) % 2 == 0 ? even_start : odd_start;
  };

  const auto t = static_cast<Color>(shared.size());
  std::vector<Color> colors(g.edge_count(), 1);
  for (const Edge& e : first)
    colors[*g.edge_id(e.u, e.v)] = layered_color(layers1, e, 1, 1, 2);
  for (const Edge& e : second)
    colors[*g.edge_id(e.u, e.v)] = layered_color(layers2, e, 3, 3, 4);
  for (Color i = 0; i < t; ++i)
    colors[*g.edge_id(shared[i].u, shared[i].v)] = 5 + i;
  return {EdgeColoring(std::move(colors), t + 4), shared.size()};
}

namespace {

/// Forests F0, F1 over the edge ids of g, grown by matroid-partition
/// augmentation.
class ForestPair {
 public:
  explicit ForestPair(const Graph& g)
      : g_(g), owner_(g.edge_count(), kFree) {}

  bool insert(EdgeId e) {
    const std::size_t m = g_.edge_count();
    build_adjacency();
    constexpr std::int64_t kUnseen = -2, kRoot = -1;
    std::vector<std::int64_t> parent(m, kUnseen);
    parent[e] = kRoot;
    std::vector<EdgeId> queue{e};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const EdgeId f = queue[head];
      for (int target = 0; target < 2; ++target) {
        if (owner_[f] == target) continue;
        const Edge& fe = g_.edge(f);
        const auto cycle = forest_path(target, fe.u, fe.v);
        if (!cycle) {
          // Shift every edge on the chain one step: f joins `target`, its
          // predecessor takes f's old forest, and so on back to e.
          std::int64_t cur = f;
          int into = target;
          while (cur != kRoot) {
            const int previous = owner_[cur];
            owner_[cur] = into;
            into = previous;
            cur = parent[cur];
          }
          recount();
          return true;
        }
        for (EdgeId h : *cycle)
          if (parent[h] == kUnseen) {
            parent[h] = f;
            queue.push_back(h);
          }
      }
    }
    return false;
  }

  std::size_t size(int forest) const { return size_[forest]; }

  std::vector<Edge> edges(int forest) const {
    std::vector<Edge> out;
    for (EdgeId id = 0; id < owner_.size(); ++id)
      if (owner_[id] == forest) out.push_back(g_.edge(id));
    return out;
  }

 private:
  static constexpr int kFree = -1;

  void recount() {
    size_[0] = size_[1] = 0;
    for (int o : owner_)
      if (o != kFree) ++size_[o];
  }

  void build_adjacency() {
    for (auto& adj : adjacency_) adj.assign(g_.vertex_count(), {});
    for (EdgeId id = 0; id < owner_.size(); ++id) {
      if (owner_[id] == kFree) continue;
      const Edge& e = g_.edge(id);
      adjacency_[owner_[id]][e.u].push_back(id);
      adjacency_[owner_[id]][e.v].push_back(id);
    }
  }

  // Edge ids on the a-b path in the given forest, or nullopt if a and b lie
  // in different trees.
  std::optional<std::vector<EdgeId>> forest_path(int forest, Vertex a,
                                                 Vertex b) const {
    const auto& adj = adjacency_[forest];
    constexpr EdgeId kNone = static_cast<EdgeId>(-1);
    std::vector<EdgeId> via(g_.vertex_count(), kNone);
    std::vector<bool> seen(g_.vertex_count(), false);
    std::vector<Vertex> stack{a};
    seen[a] = true;
    while (!stack.empty() && !seen[b]) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (EdgeId id : adj[v]) {
        const Edge& e = g_.edge(id);
        const Vertex w = e.u == v ? e.v : e.u;
        if (seen[w]) continue;
        seen[w] = true;
        via[w] = id;
        stack.push_back(w);
      }
    }
    if (!seen[b]) return std::nullopt;
    std::vector<EdgeId> path;
    for (Vertex v = b; v != a;) {
      const Edge& e = g_.edge(via[v]);
      path.push_back(via[v]);
      v = e.u == v ? e.v : e.u;
    }
    return path;
  }

  const Graph& g_;
  std::vector<int> owner_;
  std::size_t size_[2] = {0, 0};
  std::vector<std::vector<EdgeId>> adjacency_[2];
};

}  // namespace

std::optional<std::pair<std::vector<Edge>, std::vector<Edge>>>
find_two_edge_disjoint_spanning_trees(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return std::make_pair(std::vector<Edge>{}, std::vector<Edge>{});
  if (g.edge_count() < 2 * (n - 1) || !is_connected(g)) return std::nullopt;
  ForestPair forests(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (forests.size(0) == n - 1 && forests.size(1) == n - 1) break;
    forests.insert(e);
  }
  if (forests.size(0) != n - 1 || forests.size(1) != n - 1) return std::nullopt;
  return std::make_pair(forests.edges(0), forests.edges(1));
}

std::optional<EdgeColoring> pc_upper_via_trees(const Graph& g, Vertex root) {
  auto trees = find_two_edge_disjoint_spanning_trees(g);
  if (!trees) return std::nullopt;
  return color_via_two_subgraphs(g, trees->first, trees->second, root).coloring;
}

}  // namespace pcolor
