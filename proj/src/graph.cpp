#include "pcolor/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "pcolor/error.hpp"

namespace pcolor {

std::string_view error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Io: return "Io";
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::MissingColor: return "MissingColor";
    case ErrorKind::ColorOutOfRange: return "ColorOutOfRange";
    case ErrorKind::EdgeNotInGraph: return "EdgeNotInGraph";
    case ErrorKind::GraphDisconnected: return "GraphDisconnected";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ColorLimitReached: return "ColorLimitReached";
    case ErrorKind::SmallAdjacent: return "SmallAdjacent";
    case ErrorKind::SharedNeighborConflict: return "SharedNeighborConflict";
    case ErrorKind::NoParityEdge: return "NoParityEdge";
    case ErrorKind::OddCycle: return "OddCycle";
    case ErrorKind::InsufficientNeighbors: return "InsufficientNeighbors";
    case ErrorKind::NoLeafLink: return "NoLeafLink";
    case ErrorKind::SubgraphDisconnected: return "SubgraphDisconnected";
    case ErrorKind::NotSpanning: return "NotSpanning";
  }
  return "Unknown";
}

Graph::Graph(std::size_t n) : n_(n), offsets_(n + 1, 0) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> input) {
  std::vector<Edge> edges;
  edges.reserve(input.size());
  for (const Edge& e : input) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      "} references a vertex >= n=" + std::to_string(n));
    }
    if (e.u == e.v) {
      throw Error(ErrorKind::SelfLoop,
                  "self-loop at vertex " + std::to_string(e.u));
    }
    edges.push_back(Edge(e.u, e.v));
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end());
      dup != edges.end()) {
    throw Error(ErrorKind::DuplicateEdge,
                "duplicate edge {" + std::to_string(dup->u) + "," +
                    std::to_string(dup->v) + "}");
  }

  Graph g(n);
  g.edges_ = std::move(edges);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.adjacency_.resize(2 * g.edges_.size());
  g.incident_.resize(2 * g.edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Lexicographic edge order fills each list in ascending neighbor order:
  // for vertex x, neighbors w < x arrive from edges (w, x) sorted by w, and
  // all of those precede the edges (x, w') with w' > x. No re-sort needed.
  for (EdgeId id = 0; id < g.edges_.size(); ++id) {
    const Edge& e = g.edges_[id];
    g.adjacency_[cursor[e.u]] = e.v;
    g.incident_[cursor[e.u]++] = id;
    g.adjacency_[cursor[e.v]] = e.u;
    g.incident_[cursor[e.v]++] = id;
  }
  return g;
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return from_edges(n, edges);
}

Graph Graph::path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a + 1 < n; ++a) edges.emplace_back(a, a + 1);
  return from_edges(n, edges);
}

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    edges.emplace_back(a, static_cast<Vertex>((a + 1) % n));
  return from_edges(n, edges);
}

Graph Graph::star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex a = 1; a <= leaves; ++a) edges.emplace_back(0, a);
  return from_edges(leaves + 1, edges);
}

Graph Graph::hypercube(unsigned dimension) {
  const std::size_t n = std::size_t{1} << dimension;
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (unsigned bit = 0; bit < dimension; ++bit) {
      const Vertex b = a ^ (Vertex{1} << bit);
      if (a < b) edges.emplace_back(a, b);
    }
  return from_edges(n, edges);
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::optional<EdgeId> Graph::edge_id(Vertex a, Vertex b) const noexcept {
  if (a >= n_ || b >= n_ || a == b) return std::nullopt;
  // Search the shorter list.
  if (degree(a) > degree(b)) std::swap(a, b);
  const auto nbrs = neighbors(a);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b);
  if (it == nbrs.end() || *it != b) return std::nullopt;
  return incident_edges(a)[static_cast<std::size_t>(it - nbrs.begin())];
}

Graph Graph::with_edge(Edge e) const {
  std::vector<Edge> edges(edges_);
  edges.push_back(e);
  return from_edges(n_, edges);
}

Graph Graph::spanning_subgraph(std::span<const Edge> subset) const {
  for (const Edge& e : subset) {
    if (!has_edge(e.u, e.v)) {
      throw Error(ErrorKind::EdgeNotInGraph,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      "} is not in the graph");
    }
  }
  return from_edges(n_, subset);
}

EdgeColoring::EdgeColoring(std::size_t edge_count, Color palette_size)
    : colors_(edge_count, 1), palette_(palette_size) {
  if (palette_size == 0)
    throw Error(ErrorKind::InvalidArgument, "palette size must be positive");
}

EdgeColoring::EdgeColoring(std::vector<Color> colors, Color palette_size)
    : colors_(std::move(colors)), palette_(palette_size) {
  if (palette_size == 0)
    throw Error(ErrorKind::InvalidArgument, "palette size must be positive");
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    if (colors_[i] < 1 || colors_[i] > palette_) {
      throw Error(ErrorKind::ColorOutOfRange,
                  "color " + std::to_string(colors_[i]) + " of edge #" +
                      std::to_string(i) + " outside 1.." +
                      std::to_string(palette_));
    }
  }
}

void EdgeColoring::set(EdgeId id, Color c) {
  if (c < 1 || c > palette_) {
    throw Error(ErrorKind::ColorOutOfRange,
                "color " + std::to_string(c) + " outside 1.." +
                    std::to_string(palette_));
  }
  colors_.at(id) = c;
}

namespace {

// Advances the lexicographic pair cursor (a, b) by `steps` positions.
// Returns false once the cursor runs past the last pair.
bool advance_pair(std::size_t n, std::size_t& a, std::size_t& b,
                  double steps) {
  // Row a holds pairs (a, a+1..n-1).
  double offset = static_cast<double>(b - (a + 1)) + steps;
  while (a + 1 < n) {
    const double row = static_cast<double>(n - a - 1);
    if (offset < row) {
      b = a + 1 + static_cast<std::size_t>(offset);
      return true;
    }
    offset -= row;
    ++a;
  }
  return false;
}

}  // namespace

Graph gnp_sample(const RandomModel& model, SamplerPath path) {
  const std::size_t n = model.n;
  const double p = model.p;
  if (!(p >= 0.0 && p <= 1.0))
    throw Error(ErrorKind::InvalidArgument, "p must lie in [0, 1]");
  std::vector<Edge> edges;
  if (n < 2 || p == 0.0) return Graph::from_edges(n, edges);
  if (p == 1.0) return Graph::complete(n);

  SplitMix64 rng(model.seed);
  const bool skip = path == SamplerPath::GeometricSkip ||
                    (path == SamplerPath::Automatic && p < 0.2);
  if (skip) {
    const double log_q = std::log1p(-p);
    // Cursor starts one before pair (0,1): represent as (0,1) and a first
    // step of size `gap` rather than `1 + gap`.
    std::size_t a = 0, b = 1;
    double steps = std::floor(std::log1p(-rng.uniform()) / log_q);
    while (advance_pair(n, a, b, steps)) {
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
      steps = 1.0 + std::floor(std::log1p(-rng.uniform()) / log_q);
    }
  } else {
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (rng.uniform() < p) edges.emplace_back(a, b);
  }
  return Graph::from_edges(n, edges);
}

std::vector<std::uint32_t> component_labels(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> label(n, kUnset);
  std::vector<Vertex> stack;
  std::uint32_t next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != kUnset) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (label[w] == kUnset) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  const auto labels = component_labels(g);
  return std::all_of(labels.begin(), labels.end(),
                     [](std::uint32_t l) { return l == 0; });
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::size_t> dist(g.vertex_count(), kInfiniteDistance);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kInfiniteDistance) {
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

std::size_t diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    for (std::size_t d : bfs_distances(g, s)) {
      if (d == kInfiniteDistance) return kInfiniteDistance;
      best = std::max(best, d);
    }
  }
  return best;
}

std::vector<Vertex> articulation_points(const Graph& g) {
  // Iterative Hopcroft-Tarjan lowpoint computation.
  const std::size_t n = g.vertex_count();
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> disc(n, kUnset), low(n, 0);
  std::vector<bool> cut(n, false);
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
    std::size_t children;
  };
  std::vector<Frame> stack;
  std::uint32_t timer = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != kUnset) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, root, 0, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        const Vertex w = nbrs[f.next++];
        if (disc[w] == kUnset) {
          ++f.children;
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0, 0});
        } else if (w != f.parent) {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children >= 2) cut[done.v] = true;
        continue;
      }
      Frame& up = stack.back();
      low[up.v] = std::min(low[up.v], low[done.v]);
      if (up.v != root && low[done.v] >= disc[up.v]) cut[up.v] = true;
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (cut[v]) out.push_back(v);
  return out;
}

bool is_2_connected(const Graph& g) {
  return g.vertex_count() >= 3 && is_connected(g) &&
         articulation_points(g).empty();
}

}  // namespace pcolor
