#include "alternating_search.hpp"

#include <algorithm>
#include <numeric>

#include "pcolor/proper_path.hpp"

namespace pcolor {
namespace detail {

MatchingGraph MatchingGraph::from_edge_list(
    std::size_t node_count,
    const std::vector<std::pair<std::int32_t, std::int32_t>>& edges) {
  MatchingGraph g;
  g.offsets.assign(node_count + 1, 0);
  for (const auto& [a, b] : edges) {
    ++g.offsets[static_cast<std::size_t>(a) + 1];
    ++g.offsets[static_cast<std::size_t>(b) + 1];
  }
  for (std::size_t i = 0; i < node_count; ++i) g.offsets[i + 1] += g.offsets[i];
  g.adjacency.resize(2 * edges.size());
  std::vector<std::uint32_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
  for (const auto& [a, b] : edges) {
    g.adjacency[cursor[static_cast<std::size_t>(a)]++] = b;
    g.adjacency[cursor[static_cast<std::size_t>(b)]++] = a;
  }
  return g;
}

AugmentingPathSearch::AugmentingPathSearch(const MatchingGraph& graph)
    : graph_(graph) {
  const std::size_t n = graph.node_count();
  parent_.resize(n);
  set_parent_.resize(n);
  set_base_.resize(n);
  used_.resize(n);
  lca_mark_.assign(n, 0);
  queue_.reserve(n);
}

std::int32_t AugmentingPathSearch::find(std::int32_t x) {
  while (set_parent_[x] != x) {
    set_parent_[x] = set_parent_[set_parent_[x]];
    x = set_parent_[x];
  }
  return x;
}

std::int32_t AugmentingPathSearch::base(std::int32_t x) {
  return set_base_[find(x)];
}

void AugmentingPathSearch::unite_into(std::int32_t x, std::int32_t b) {
  const std::int32_t rx = find(x);
  const std::int32_t rb = find(b);
  if (rx != rb) set_parent_[rx] = rb;
  set_base_[rb] = b;
}

std::int32_t AugmentingPathSearch::lowest_common_base(
    std::int32_t a, std::int32_t b, const std::vector<std::int32_t>& mate) {
  if (++lca_stamp_ == 0) {
    std::fill(lca_mark_.begin(), lca_mark_.end(), 0);
    lca_stamp_ = 1;
  }
  for (;;) {
    a = base(a);
    lca_mark_[a] = lca_stamp_;
    if (mate[a] == -1) break;
    a = parent_[mate[a]];
  }
  for (;;) {
    b = base(b);
    if (lca_mark_[b] == lca_stamp_) return b;
    b = parent_[mate[b]];
  }
}

void AugmentingPathSearch::mark_path(std::int32_t v, std::int32_t b,
                                     std::int32_t child,
                                     const std::vector<std::int32_t>& mate) {
  // Members are merged only after both walks, so base() still reports the
  // old sub-blossoms while walking.
  while (base(v) != b) {
    const std::int32_t odd = mate[v];
    parent_[v] = child;
    child = odd;
    pending_.push_back(v);
    pending_.push_back(odd);
    v = parent_[odd];
  }
}

void AugmentingPathSearch::contract(std::int32_t b) {
  for (const std::int32_t x : pending_) {
    unite_into(x, b);
    // Odd vertices swallowed by the blossom become even and get scanned.
    if (!used_[x]) {
      used_[x] = 1;
      queue_.push_back(x);
    }
  }
  pending_.clear();
}

bool AugmentingPathSearch::augment(std::vector<std::int32_t>& mate,
                                   std::int32_t root) {
  std::fill(parent_.begin(), parent_.end(), -1);
  std::fill(used_.begin(), used_.end(), 0);
  std::iota(set_parent_.begin(), set_parent_.end(), 0);
  std::iota(set_base_.begin(), set_base_.end(), 0);

  queue_.clear();
  used_[root] = 1;
  queue_.push_back(root);
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const std::int32_t v = queue_[head];
    for (auto i = graph_.offsets[v]; i < graph_.offsets[v + 1]; ++i) {
      std::int32_t to = graph_.adjacency[i];
      if (base(v) == base(to) || mate[v] == to) continue;
      const bool to_even =
          to == root || (mate[to] != -1 && parent_[mate[to]] != -1);
      if (to_even) {
        const std::int32_t b = lowest_common_base(v, to, mate);
        mark_path(v, b, to, mate);
        mark_path(to, b, v, mate);
        contract(b);
      } else if (parent_[to] == -1) {
        parent_[to] = v;
        if (mate[to] == -1) {
          // Flip the alternating path back to the root.
          while (to != -1) {
            const std::int32_t pv = parent_[to];
            const std::int32_t next = mate[pv];
            mate[to] = pv;
            mate[pv] = to;
            to = next;
          }
          return true;
        }
        const std::int32_t m = mate[to];
        used_[m] = 1;
        queue_.push_back(m);
      }
    }
  }
  return false;
}

}  // namespace detail

std::optional<Path> proper_path_by_matching(const Graph& g,
                                            const EdgeColoring& c, Vertex s,
                                            Vertex t) {
  // Gadget: s and t are single nodes. Every other vertex x with d >= 2
  // distinct incident colors becomes one node per color ("copies"); when
  // d >= 3 it also gets d-2 dummies and a linked pair z1-z2, all adjacent to
  // every copy. In any perfect matching exactly zero or two copies of x are
  // matched outside the gadget, and two outside copies have distinct
  // colors. Vertices with d <= 1 cannot be interior to a proper path and are
  // dropped. A perfect matching exists iff a proper s-t path exists, and the
  // initial matching below leaves only s and t exposed, so a single
  // augmenting-path search decides it.
  using detail::MatchingGraph;
  const std::size_t n = g.vertex_count();
  if (s == t || s >= n || t >= n) return std::nullopt;
  if (g.has_edge(s, t)) return Path{s, t};

  constexpr std::int32_t kS = 0, kT = 1;
  std::vector<std::vector<Color>> palette(n);
  std::vector<std::int32_t> first_copy(n, -1);
  std::vector<std::int32_t> owner{static_cast<std::int32_t>(s),
                                  static_cast<std::int32_t>(t)};
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  std::vector<std::int32_t> mate{-1, -1};
  std::int32_t next = 2;

  auto add_node = [&](Vertex x) {
    owner.push_back(static_cast<std::int32_t>(x));
    mate.push_back(-1);
    return next++;
  };
  auto pair_up = [&](std::int32_t a, std::int32_t b) {
    mate[a] = b;
    mate[b] = a;
  };

  for (Vertex x = 0; x < n; ++x) {
    if (x == s || x == t) continue;
    auto& colors = palette[x];
    for (EdgeId id : g.incident_edges(x)) colors.push_back(c[id]);
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    const std::size_t d = colors.size();
    if (d < 2) continue;
    first_copy[x] = next;
    for (std::size_t i = 0; i < d; ++i) add_node(x);
    if (d == 2) {
      edges.emplace_back(first_copy[x], first_copy[x] + 1);
      pair_up(first_copy[x], first_copy[x] + 1);
      continue;
    }
    std::vector<std::int32_t> helpers;
    for (std::size_t i = 0; i < d; ++i) helpers.push_back(add_node(x));
    // helpers[0..d-3] are dummies, helpers[d-2], helpers[d-1] are z1, z2.
    for (std::size_t i = 0; i < d; ++i)
      for (std::int32_t h : helpers)
        edges.emplace_back(first_copy[x] + static_cast<std::int32_t>(i), h);
    edges.emplace_back(helpers[d - 2], helpers[d - 1]);
    for (std::size_t i = 0; i < d; ++i)
      pair_up(first_copy[x] + static_cast<std::int32_t>(i), helpers[i]);
  }

  auto node_for = [&](Vertex x, Color col) -> std::int32_t {
    if (x == s) return kS;
    if (x == t) return kT;
    if (first_copy[x] < 0) return -1;
    const auto& colors = palette[x];
    const auto it = std::lower_bound(colors.begin(), colors.end(), col);
    return first_copy[x] + static_cast<std::int32_t>(it - colors.begin());
  };
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    const std::int32_t a = node_for(e.u, c[id]);
    const std::int32_t b = node_for(e.v, c[id]);
    if (a >= 0 && b >= 0) edges.emplace_back(a, b);
  }

  const auto graph =
      MatchingGraph::from_edge_list(static_cast<std::size_t>(next), edges);
  detail::AugmentingPathSearch search(graph);
  if (!search.augment(mate, kS)) return std::nullopt;

  // Read the s-t path off the perfect matching; alternating cycles that the
  // matching may also contain are ignored.
  auto is_copy = [&](std::int32_t node) {
    if (node <= kT) return true;
    const auto x = static_cast<Vertex>(owner[node]);
    return node - first_copy[x] < static_cast<std::int32_t>(palette[x].size());
  };
  Path path{s};
  std::int32_t at = mate[kS];
  while (at != kT) {
    const auto x = static_cast<Vertex>(owner[at]);
    path.push_back(x);
    std::int32_t exit = -1;
    for (std::size_t i = 0; i < palette[x].size(); ++i) {
      const std::int32_t copy = first_copy[x] + static_cast<std::int32_t>(i);
      if (copy == at) continue;
      const std::int32_t m = mate[copy];
      if (m >= 0 && is_copy(m) && owner[m] != owner[copy]) {
        exit = copy;
        break;
      }
    }
    at = mate[exit];
  }
  path.push_back(t);
  return path;
}

}  // namespace pcolor
