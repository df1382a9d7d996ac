#include "pcolor/proper_path.hpp"

#include <algorithm>
#include <thread>

#include "pcolor/error.hpp"

namespace pcolor {
namespace {

/// State graph of (vertex, color of the edge used to arrive). A walk is
/// proper iff it is a path in this graph, so breadth-first search from a
/// source decides proper-walk reachability. States are numbered per vertex
/// over the distinct colors incident to it.
class ColorStateGraph {
 public:
  ColorStateGraph(const Graph& g, const EdgeColoring& c) : g_(g), c_(c) {
    const std::size_t n = g.vertex_count();
    state_offset_.assign(n + 1, 0);
    std::vector<Color> scratch;
    std::vector<std::vector<Color>> palettes(n);
    for (Vertex v = 0; v < n; ++v) {
      scratch.clear();
      for (EdgeId id : g.incident_edges(v)) scratch.push_back(c[id]);
      std::sort(scratch.begin(), scratch.end());
      scratch.erase(std::unique(scratch.begin(), scratch.end()),
                    scratch.end());
      palettes[v] = scratch;
      state_offset_[v + 1] = state_offset_[v] + scratch.size();
    }
    state_vertex_.resize(state_offset_[n]);
    for (Vertex v = 0; v < n; ++v)
      for (auto s = state_offset_[v]; s < state_offset_[v + 1]; ++s)
        state_vertex_[s] = v;
    // For each incidence (v -> w via edge e) the state entered at w.
    arrival_state_.resize(2 * g.edge_count());
    std::size_t slot = 0;
    for (Vertex v = 0; v < n; ++v) {
      const auto nbrs = g.neighbors(v);
      const auto ids = g.incident_edges(v);
      for (std::size_t i = 0; i < nbrs.size(); ++i, ++slot) {
        const auto& pal = palettes[nbrs[i]];
        const auto it = std::lower_bound(pal.begin(), pal.end(), c[ids[i]]);
        arrival_state_[slot] = static_cast<std::uint32_t>(
            state_offset_[nbrs[i]] + static_cast<std::size_t>(it - pal.begin()));
      }
    }
    incidence_offset_.resize(n + 1, 0);
    for (Vertex v = 0; v < n; ++v)
      incidence_offset_[v + 1] = incidence_offset_[v] + g.degree(v);
    state_color_.assign(state_count(), 0);
    for (Vertex v = 0; v < n; ++v)
      for (auto s = state_offset_[v]; s < state_offset_[v + 1]; ++s)
        state_color_[s] = palettes[v][s - state_offset_[v]];
  }

  std::size_t state_count() const { return state_vertex_.size(); }
  Vertex vertex_of(std::uint32_t s) const { return state_vertex_[s]; }
  std::size_t first_state(Vertex v) const { return state_offset_[v]; }
  std::size_t end_state(Vertex v) const { return state_offset_[v + 1]; }

  Color color_of(std::uint32_t s) const { return state_color_[s]; }

  const Graph& graph() const { return g_; }
  const EdgeColoring& coloring() const { return c_; }
  std::uint32_t arrival(std::size_t incidence) const {
    return arrival_state_[incidence];
  }
  std::size_t incidence_begin(Vertex v) const { return incidence_offset_[v]; }

 private:
  const Graph& g_;
  const EdgeColoring& c_;
  std::vector<std::size_t> state_offset_;
  std::vector<Vertex> state_vertex_;
  std::vector<std::uint32_t> arrival_state_;
  std::vector<std::size_t> incidence_offset_;
  std::vector<Color> state_color_;
};

constexpr std::uint32_t kUnvisited = 0xFFFFFFFFu;
constexpr std::uint32_t kFromSource = 0xFFFFFFFEu;

/// Per-thread scratch space for searches from one source.
class SourceSearch {
 public:
  explicit SourceSearch(const ColorStateGraph& states)
      : states_(states),
        pred_(states.state_count(), kUnvisited),
        vertex_mark_(states.graph().vertex_count(), 0) {}

  void run(Vertex source) {
    source_ = source;
    for (std::uint32_t s : touched_) pred_[s] = kUnvisited;
    touched_.clear();
    const Graph& g = states_.graph();
    const EdgeColoring& c = states_.coloring();
    // The virtual start state may leave along any edge.
    {
      const auto ids = g.incident_edges(source);
      const std::size_t base = states_.incidence_begin(source);
      for (std::size_t i = 0; i < ids.size(); ++i) {
        const std::uint32_t to = states_.arrival(base + i);
        if (pred_[to] == kUnvisited) {
          pred_[to] = kFromSource;
          touched_.push_back(to);
        }
      }
    }
    for (std::size_t head = 0; head < touched_.size(); ++head) {
      const std::uint32_t s = touched_[head];
      const Vertex v = states_.vertex_of(s);
      const Color arrived = states_.color_of(s);
      const auto ids = g.incident_edges(v);
      const std::size_t base = states_.incidence_begin(v);
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (c[ids[i]] == arrived) continue;
        const std::uint32_t to = states_.arrival(base + i);
        if (pred_[to] == kUnvisited) {
          pred_[to] = s;
          touched_.push_back(to);
        }
      }
    }
  }

  bool walk_reachable(Vertex v) const {
    if (v == source_) return true;
    for (auto s = states_.first_state(v); s < states_.end_state(v); ++s)
      if (pred_[s] != kUnvisited) return true;
    return false;
  }

  /// Traces the breadth-first walks ending at v; returns the first that is
  /// vertex-simple (and hence a proper path).
  std::optional<Path> simple_trace(Vertex v) {
    for (auto s = states_.first_state(v); s < states_.end_state(v); ++s) {
      if (pred_[s] == kUnvisited) continue;
      if (++stamp_ == 0) {
        std::fill(vertex_mark_.begin(), vertex_mark_.end(), 0);
        stamp_ = 1;
      }
      Path reversed;
      bool simple = true;
      std::uint32_t at = static_cast<std::uint32_t>(s);
      while (true) {
        const Vertex x = states_.vertex_of(at);
        if (vertex_mark_[x] == stamp_) {
          simple = false;
          break;
        }
        vertex_mark_[x] = stamp_;
        reversed.push_back(x);
        if (pred_[at] == kFromSource) break;
        at = pred_[at];
      }
      if (!simple || vertex_mark_[source_] == stamp_) continue;
      reversed.push_back(source_);
      std::reverse(reversed.begin(), reversed.end());
      return reversed;
    }
    return std::nullopt;
  }

  /// Exact decision for (source, v) given that run(source) has completed.
  std::optional<Path> decide(Vertex v) {
    if (!walk_reachable(v)) return std::nullopt;
    if (auto path = simple_trace(v)) return path;
    return proper_path_by_matching(states_.graph(), states_.coloring(),
                                   source_, v);
  }

 private:
  const ColorStateGraph& states_;
  Vertex source_ = 0;
  std::vector<std::uint32_t> pred_;
  std::vector<std::uint32_t> touched_;
  std::vector<std::uint32_t> vertex_mark_;
  std::uint32_t stamp_ = 0;
};

void check_inputs(const Graph& g, const EdgeColoring& c) {
  if (c.size() != g.edge_count())
    throw Error(ErrorKind::InvalidArgument,
                "coloring has " + std::to_string(c.size()) +
                    " entries for a graph with " +
                    std::to_string(g.edge_count()) + " edges");
}

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.vertex_count())
    throw Error(ErrorKind::VertexOutOfRange,
                "vertex " + std::to_string(v) + " >= n=" +
                    std::to_string(g.vertex_count()));
}

struct SourceResult {
  std::vector<Edge> failing;
  std::vector<std::pair<Edge, Path>> certificates;
};

}  // namespace

bool is_proper_path(const Graph& g, const EdgeColoring& c, const Path& path) {
  if (c.size() != g.edge_count()) return false;
  for (Vertex v : path)
    if (v >= g.vertex_count()) return false;
  Path sorted(path);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  std::optional<Color> previous;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const auto id = g.edge_id(path[i], path[i + 1]);
    if (!id) return false;
    if (previous && *previous == c[*id]) return false;
    previous = c[*id];
  }
  return true;
}

std::vector<Vertex> proper_walk_reachable(const Graph& g, const EdgeColoring& c,
                                          Vertex u) {
  check_inputs(g, c);
  check_vertex(g, u);
  ColorStateGraph states(g, c);
  SourceSearch search(states);
  search.run(u);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (search.walk_reachable(v)) out.push_back(v);
  return out;
}

std::optional<Path> proper_path_exists(const Graph& g, const EdgeColoring& c,
                                       Vertex u, Vertex v) {
  check_inputs(g, c);
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v)
    throw Error(ErrorKind::InvalidArgument,
                "proper_path_exists needs distinct endpoints");
  ColorStateGraph states(g, c);
  SourceSearch search(states);
  search.run(u);
  return search.decide(v);
}

std::optional<Path> brute_force_proper_path(const Graph& g,
                                            const EdgeColoring& c, Vertex u,
                                            Vertex v) {
  check_inputs(g, c);
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) return Path{u};
  std::vector<bool> on_path(g.vertex_count(), false);
  Path path{u};
  on_path[u] = true;
  // Explicit stack of (vertex, next neighbor index, color used to arrive).
  struct Frame {
    Vertex vertex;
    std::size_t next;
    Color arrived;
  };
  std::vector<Frame> stack{{u, 0, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto nbrs = g.neighbors(f.vertex);
    const auto ids = g.incident_edges(f.vertex);
    if (f.next == nbrs.size()) {
      on_path[f.vertex] = false;
      path.pop_back();
      stack.pop_back();
      continue;
    }
    const std::size_t i = f.next++;
    const Vertex w = nbrs[i];
    const Color col = c[ids[i]];
    if (on_path[w] || col == f.arrived) continue;
    path.push_back(w);
    if (w == v) return path;
    on_path[w] = true;
    stack.push_back({w, 0, col});
  }
  return std::nullopt;
}

ConnectivityReport is_properly_connected(const Graph& g, const EdgeColoring& c,
                                         const VerifyOptions& options) {
  check_inputs(g, c);
  const std::size_t n = g.vertex_count();
  ColorStateGraph states(g, c);
  ConnectivityReport report;

  if (options.early_exit || options.threads <= 1 || n < 64) {
    SourceSearch search(states);
    for (Vertex u = 0; u + 1 < n; ++u) {
      search.run(u);
      for (Vertex v = u + 1; v < n; ++v) {
        ++report.pair_count_checked;
        auto path = search.decide(v);
        if (!path) {
          report.properly_connected = false;
          report.failing_pairs.emplace_back(u, v);
          if (options.early_exit) return report;
        } else if (options.certificates) {
          report.certificates.emplace_back(Edge(u, v), std::move(*path));
        }
      }
    }
    return report;
  }

  // Sources are dealt round-robin; results are merged in source order so
  // the report does not depend on scheduling.
  std::vector<SourceResult> per_source(n);
  const unsigned workers =
      std::min<unsigned>(options.threads, static_cast<unsigned>(n));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      SourceSearch search(states);
      for (Vertex u = w; u + 1 < n; u += workers) {
        search.run(u);
        for (Vertex v = u + 1; v < n; ++v) {
          auto path = search.decide(v);
          if (!path)
            per_source[u].failing.emplace_back(u, v);
          else if (options.certificates)
            per_source[u].certificates.emplace_back(Edge(u, v),
                                                    std::move(*path));
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  report.pair_count_checked = n * (n - 1) / 2;
  for (auto& r : per_source) {
    report.failing_pairs.insert(report.failing_pairs.end(), r.failing.begin(),
                                r.failing.end());
    for (auto& cert : r.certificates)
      report.certificates.push_back(std::move(cert));
  }
  report.properly_connected = report.failing_pairs.empty();
  return report;
}

ConnectivityReport check_pairs(const Graph& g, const EdgeColoring& c,
                               const std::vector<Edge>& pairs,
                               bool certificates) {
  check_inputs(g, c);
  ColorStateGraph states(g, c);
  SourceSearch search(states);
  ConnectivityReport report;
  std::optional<Vertex> current;
  for (const Edge& pair : pairs) {
    check_vertex(g, pair.v);
    if (pair.u == pair.v) continue;
    if (current != pair.u) {
      search.run(pair.u);
      current = pair.u;
    }
    ++report.pair_count_checked;
    auto path = search.decide(pair.v);
    if (!path) {
      report.properly_connected = false;
      report.failing_pairs.push_back(pair);
    } else if (certificates) {
      report.certificates.emplace_back(pair, std::move(*path));
    }
  }
  return report;
}

}  // namespace pcolor
