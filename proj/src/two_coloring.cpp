#include "pcolor/two_coloring.hpp"

#include <algorithm>
#include <cmath>

#include "pcolor/error.hpp"
#include "pcolor/proper_path.hpp"
#include "pcolor/rng.hpp"

namespace pcolor {
namespace {

std::string describe(Edge e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

EdgeId require_edge(const Graph& g, Vertex a, Vertex b) {
  const auto id = g.edge_id(a, b);
  if (!id)
    throw Error(ErrorKind::EdgeNotInGraph,
                "edge " + describe(Edge(a, b)) + " is not in the graph");
  return *id;
}

// Fisher-Yates with the library generator, so orderings do not depend on the
// standard library's shuffle.
template <typename T>
void seeded_shuffle(std::vector<T>& items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i)
    std::swap(items[i - 1], items[rng.below(i)]);
}

}  // namespace

VertexClassification classify_by_threshold(const Graph& g, double tau) {
  VertexClassification cls;
  const std::size_t n = g.vertex_count();
  cls.tau = tau;
  cls.beta = n >= 2 ? tau / std::log(static_cast<double>(n)) : 0.0;
  for (Vertex v = 0; v < n; ++v)
    (static_cast<double>(g.degree(v)) < tau ? cls.small : cls.large)
        .push_back(v);
  return cls;
}

VertexClassification classify_vertices(const Graph& g, double beta) {
  const std::size_t n = g.vertex_count();
  const double tau = n >= 2 ? beta * std::log(static_cast<double>(n)) : 0.0;
  auto cls = classify_by_threshold(g, tau);
  cls.beta = beta;
  return cls;
}

std::vector<Vertex> AttachmentMatching::roots() const {
  std::vector<Vertex> out;
  for (const auto& pair : pairs) out.push_back(pair.large);
  if (parity_edge) out.push_back(parity_edge->v);
  return out;
}

AttachmentMatching small_matching(const Graph& g,
                                  const VertexClassification& cls) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> small(n, false), used(n, false);
  for (Vertex y : cls.small) small[y] = true;

  for (const Edge& e : g.edges())
    if (small[e.u] && small[e.v])
      throw Error(ErrorKind::SmallAdjacent,
                  "small vertices " + std::to_string(e.u) + " and " +
                      std::to_string(e.v) + " are adjacent");

  AttachmentMatching m;
  for (Vertex y : cls.small) {
    const auto nbrs = g.neighbors(y);
    const auto it = std::find_if(nbrs.begin(), nbrs.end(), [&](Vertex w) {
      return !small[w] && !used[w];
    });
    if (it == nbrs.end())
      throw Error(ErrorKind::SharedNeighborConflict,
                  "small vertex " + std::to_string(y) +
                      " has no unused large neighbor");
    used[*it] = true;
    m.pairs.push_back({*it, y});
  }

  if ((n - cls.small.size()) % 2 == 1) {
    const auto edges = g.edges();
    const auto it = std::find_if(edges.begin(), edges.end(), [&](Edge e) {
      return !small[e.u] && !small[e.v] && !used[e.u] && !used[e.v];
    });
    if (it == edges.end())
      throw Error(ErrorKind::NoParityEdge,
                  "no edge between unmatched large vertices");
    m.parity_edge = *it;
    m.excluded = it->u;
  }
  for (Vertex v : cls.large)
    if (v != m.excluded) m.v1.push_back(v);
  return m;
}

EdgeColoring PartialColoring::finish(Color fill) const {
  std::vector<Color> out(colors);
  Color palette = std::max<Color>(2, fill);
  for (auto& c : out) {
    if (c == 0) c = fill;
    palette = std::max(palette, c);
  }
  return EdgeColoring(std::move(out), palette);
}

PartialColoring color_cycle_and_matching(const Graph& g,
                                         const std::vector<Vertex>& cycle,
                                         const AttachmentMatching& matching) {
  if (cycle.size() % 2 == 1)
    throw Error(ErrorKind::OddCycle, "cycle of odd length " +
                                         std::to_string(cycle.size()));
  if (cycle.size() < 4)
    throw Error(ErrorKind::InvalidArgument, "cycle needs at least 4 vertices");
  const auto canon = canonical_cycle(cycle);
  PartialColoring out(g.edge_count());
  for (std::size_t i = 0; i < canon.size(); ++i) {
    const EdgeId id = require_edge(g, canon[i], canon[(i + 1) % canon.size()]);
    if (out.is_colored(id))
      throw Error(ErrorKind::InvalidArgument, "cycle repeats a vertex");
    out.colors[id] = i % 2 == 0 ? 1 : 2;
  }
  for (const auto& pair : matching.pairs)
    out.colors[require_edge(g, pair.large, pair.small)] = 1;
  if (matching.parity_edge)
    out.colors[require_edge(g, matching.parity_edge->u,
                            matching.parity_edge->v)] = 1;
  return out;
}

TreeGrowthParams TreeGrowthParams::for_order(std::size_t n, double epsilon) {
  TreeGrowthParams params;
  params.epsilon = epsilon;
  const double ln_n = n >= 2 ? std::log(static_cast<double>(n)) : 0.0;
  params.arity = std::max(2u, static_cast<unsigned>(std::floor(ln_n / 101.0)));
  if (n >= 16) {
    const double d = ln_n / std::log(ln_n);
    params.depth =
        std::max(1u, static_cast<unsigned>(std::floor((0.5 + epsilon) * d)));
  } else {
    params.depth = 1;
  }
  return params;
}

void TreeGrowthParams::validate() const {
  if (arity < 2)
    throw Error(ErrorKind::InvalidArgument, "tree arity must be at least 2");
  if (depth < 1)
    throw Error(ErrorKind::InvalidArgument, "tree depth must be at least 1");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw Error(ErrorKind::InvalidArgument, "epsilon must lie in (0, 1)");
}

std::vector<Edge> LeafTree::edges() const {
  std::vector<Edge> out;
  for (std::size_t d = 1; d < levels.size(); ++d)
    for (std::size_t k = 0; k < levels[d].size(); ++k)
      out.emplace_back(parents[d][k], levels[d][k]);
  return out;
}

std::vector<LeafTree> grow_leaf_trees(const Graph& g,
                                      const std::vector<Edge>& forbidden_edges,
                                      const std::vector<Vertex>& roots,
                                      const TreeGrowthParams& params,
                                      std::uint64_t seed) {
  params.validate();
  const std::size_t n = g.vertex_count();
  std::vector<Edge> forbidden(forbidden_edges);
  std::sort(forbidden.begin(), forbidden.end());
  auto is_forbidden = [&](Vertex a, Vertex b) {
    return std::binary_search(forbidden.begin(), forbidden.end(), Edge(a, b));
  };

  std::vector<bool> taken(n, false);
  for (Vertex r : roots) {
    if (r >= n)
      throw Error(ErrorKind::VertexOutOfRange,
                  "root " + std::to_string(r) + " is outside the graph");
    if (taken[r])
      throw Error(ErrorKind::InvalidArgument,
                  "root " + std::to_string(r) + " listed twice");
    taken[r] = true;
  }

  SplitMix64 rng(seed);
  std::vector<LeafTree> trees;
  std::vector<Vertex> order;
  for (Vertex r : roots) {
    LeafTree tree;
    tree.root = r;
    tree.levels.push_back({r});
    tree.parents.emplace_back();
    for (unsigned d = 1; d <= params.depth; ++d) {
      std::vector<Vertex> level, parents;
      for (Vertex w : tree.levels[d - 1]) {
        const auto nbrs = g.neighbors(w);
        order.assign(nbrs.begin(), nbrs.end());
        seeded_shuffle(order, rng);
        unsigned children = 0;
        for (Vertex c : order) {
          if (children == params.arity) break;
          if (taken[c] || is_forbidden(w, c)) continue;
          taken[c] = true;
          level.push_back(c);
          parents.push_back(w);
          ++children;
        }
        if (children < params.arity)
          throw Error(ErrorKind::InsufficientNeighbors,
                      "tree rooted at " + std::to_string(r) +
                          " stopped at depth " + std::to_string(d - 1) +
                          ": vertex " + std::to_string(w) + " has only " +
                          std::to_string(children) + " free children");
      }
      tree.levels.push_back(std::move(level));
      tree.parents.push_back(std::move(parents));
    }
    trees.push_back(std::move(tree));
  }
  return trees;
}

TreeColoringResult color_trees_and_links(const std::vector<LeafTree>& trees,
                                         PartialColoring coloring,
                                         const Graph& g,
                                         bool require_all_links) {
  if (coloring.colors.size() != g.edge_count())
    throw Error(ErrorKind::InvalidArgument,
                "coloring does not match the graph's edge count");
  for (const auto& tree : trees) {
    if (tree.levels.size() != trees.front().levels.size())
      throw Error(ErrorKind::InvalidArgument, "trees differ in depth");
    for (std::size_t d = 1; d < tree.levels.size(); ++d)
      for (std::size_t k = 0; k < tree.levels[d].size(); ++k)
        coloring.colors[require_edge(g, tree.parents[d][k], tree.levels[d][k])] =
            tree_level_color(d - 1);
  }

  TreeColoringResult result{std::move(coloring), {}, {}};
  if (trees.size() < 2) return result;
  const std::size_t depth = trees.front().levels.size() - 1;
  const Color link_color = depth == 0 ? 2 : 3 - tree_level_color(depth - 1);

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> leaf_owner(g.vertex_count(), kNone);
  for (std::size_t i = 0; i < trees.size(); ++i)
    for (Vertex leaf : trees[i].leaves()) leaf_owner[leaf] = i;

  std::vector<std::optional<EdgeId>> link(trees.size() * trees.size());
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    std::size_t a = leaf_owner[e.u], b = leaf_owner[e.v];
    if (a == kNone || b == kNone || a == b || result.coloring.is_colored(id))
      continue;
    if (a > b) std::swap(a, b);
    auto& slot = link[a * trees.size() + b];
    if (!slot) slot = id;
  }
  for (std::size_t i = 0; i < trees.size(); ++i)
    for (std::size_t j = i + 1; j < trees.size(); ++j) {
      const auto& slot = link[i * trees.size() + j];
      if (!slot) {
        if (require_all_links)
          throw Error(ErrorKind::NoLeafLink,
                      "no edge between the leaves of trees " +
                          std::to_string(i) + " and " + std::to_string(j));
        result.missing.emplace_back(i, j);
        continue;
      }
      result.coloring.colors[*slot] = link_color;
      result.links.push_back(g.edge(*slot));
    }
  return result;
}

const char* stage_name(Stage s) {
  switch (s) {
    case Stage::Classified: return "Classified";
    case Stage::Matched: return "Matched";
    case Stage::CycleFound: return "CycleFound";
    case Stage::Colored: return "Colored";
    case Stage::TreesBuilt: return "TreesBuilt";
    case Stage::Verified: return "Verified";
  }
  return "Unknown";
}

std::string ConstructionTrace::outcome() const {
  if (failed_at) return std::string("Failed(") + stage_name(*failed_at) + ")";
  return stage_name(stage_reached);
}

namespace {

// Seed streams split off the construction seed.
constexpr std::uint64_t kCycleStream = 0;
constexpr std::uint64_t kTreeStream = 1;
constexpr std::uint64_t kTreeRetryStream = 16;
constexpr std::uint64_t kRepairStream = 64;

class Pipeline {
 public:
  Pipeline(const Graph& g, const ConstructionParams& params, std::uint64_t seed)
      : g_(g), params_(params), seed_(seed) {}

  ConstructionResult run() {
    const std::size_t n = g_.vertex_count();
    if (n < 3)
      throw Error(ErrorKind::InvalidArgument,
                  "construction needs at least 3 vertices");
    if (!is_connected(g_))
      throw Error(ErrorKind::GraphDisconnected, "graph is not connected");

    auto& trace = result_.trace;
    trace.paper_constants = params_.paper_constants;
    double tau = params_.beta * std::log(static_cast<double>(n));
    if (!params_.paper_constants) tau = std::max(tau, params_.min_tau);
    trace.classification = classify_by_threshold(g_, tau);
    trace.classification.beta = params_.beta;
    trace.stage_reached = Stage::Classified;

    try {
      trace.matching = small_matching(g_, trace.classification);
    } catch (const Error& e) {
      return fail(Stage::Matched, e);
    }
    trace.stage_reached = Stage::Matched;

    trace.tree_params = TreeGrowthParams::for_order(n, params_.epsilon);
    if (params_.arity) trace.tree_params.arity = *params_.arity;
    if (params_.depth) trace.tree_params.depth = *params_.depth;
    trace.tree_params.validate();

    const auto& v1 = trace.matching.v1;
    if (v1.size() < 4)
      return fail(Stage::CycleFound, "V1 has " + std::to_string(v1.size()) +
                                         " vertices, too few for a cycle");
    auto cycle = posa_hamiltonian_cycle(g_, v1, derive_seed(seed_, kCycleStream),
                                        params_.posa);
    if (!cycle)
      return fail(Stage::CycleFound,
                  "no Hamiltonian cycle of G[V1] within the search budget");
    trace.hamiltonian_cycle = std::move(*cycle);
    trace.stage_reached = Stage::CycleFound;

    base_ = color_cycle_and_matching(g_, trace.hamiltonian_cycle, trace.matching);
    trace.stage_reached = Stage::Colored;

    roots_ = trace.matching.roots();
    if (roots_.size() >= 2) {
      std::vector<Edge> inside;
      std::vector<bool> in_v1(n, false);
      for (Vertex v : v1) in_v1[v] = true;
      for (const Edge& e : g_.edges())
        if (in_v1[e.u] && in_v1[e.v]) inside.push_back(e);
      h_ = g_.spanning_subgraph(inside);
      if (!grow_with_retries(derive_seed(seed_, kTreeStream)))
        return fail(Stage::TreesBuilt, last_tree_error_);
    }
    trace.stage_reached = Stage::TreesBuilt;

    auto coloring = assemble();
    VerifyOptions full;
    full.early_exit = false;
    auto report = is_properly_connected(g_, coloring, full);
    if (!report.properly_connected) {
      if (!repair(coloring, report)) {
        trace.failed_at = Stage::Verified;
        trace.failure_reason = std::to_string(report.failing_pairs.size()) +
                               " pairs without a proper path after repair";
        return std::move(result_);
      }
    }
    trace.stage_reached = Stage::Verified;
    result_.coloring = std::move(coloring);
    return std::move(result_);
  }

 private:
  ConstructionResult fail(Stage stage, const std::string& reason) {
    result_.trace.failed_at = stage;
    result_.trace.failure_reason = reason;
    return std::move(result_);
  }
  ConstructionResult fail(Stage stage, const Error& e) {
    return fail(stage, std::string(error_kind_name(e.kind())) + ": " + e.what());
  }

  std::vector<Edge> cycle_edges() const {
    const auto& c = result_.trace.hamiltonian_cycle;
    std::vector<Edge> out;
    for (std::size_t i = 0; i < c.size(); ++i)
      out.emplace_back(c[i], c[(i + 1) % c.size()]);
    return out;
  }

  bool grow_trees(std::uint64_t seed) {
    try {
      result_.trace.trees = grow_leaf_trees(h_, cycle_edges(), roots_,
                                            result_.trace.tree_params, seed);
      return true;
    } catch (const Error& e) {
      last_tree_error_ =
          std::string(error_kind_name(e.kind())) + ": " + e.what();
      return false;
    }
  }

  bool grow_with_retries(std::uint64_t first_seed) {
    if (grow_trees(first_seed)) return true;
    for (unsigned k = 0; k < params_.repair_rounds; ++k) {
      result_.trace.repair_log.push_back("tree growth failed (" +
                                         last_tree_error_ + "), retrying");
      if (grow_trees(derive_seed(seed_, kTreeRetryStream + k))) return true;
    }
    return false;
  }

  EdgeColoring assemble() {
    auto& trace = result_.trace;
    PartialColoring partial = base_;
    trace.leaf_link_edges.clear();
    trace.missing_links.clear();
    if (!trace.trees.empty()) {
      auto colored = color_trees_and_links(trace.trees, base_, g_, false);
      partial = std::move(colored.coloring);
      trace.leaf_link_edges = std::move(colored.links);
      trace.missing_links = std::move(colored.missing);
      for (const Edge& e : flipped_) {
        const auto id = g_.edge_id(e.u, e.v);
        if (id && std::find(trace.leaf_link_edges.begin(),
                            trace.leaf_link_edges.end(),
                            e) != trace.leaf_link_edges.end())
          partial.colors[*id] = 3 - partial.colors[*id];
      }
    }
    return partial.finish(1);
  }

  struct Snapshot {
    std::vector<Vertex> cycle;
    PartialColoring base;
    std::vector<LeafTree> trees;
    std::vector<Edge> flipped;
  };
  Snapshot save() const {
    return {result_.trace.hamiltonian_cycle, base_, result_.trace.trees,
            flipped_};
  }
  void restore(Snapshot s) {
    result_.trace.hamiltonian_cycle = std::move(s.cycle);
    base_ = std::move(s.base);
    result_.trace.trees = std::move(s.trees);
    flipped_ = std::move(s.flipped);
  }

  // Each round tries, in order: regrow the trees, flip one leaf link, rerun
  // the cycle search. An action is kept only if it reduces the number of
  // previously failing pairs; once they all pass, the full check decides.
  bool repair(EdgeColoring& coloring, ConnectivityReport& report) {
    auto& log = result_.trace.repair_log;
    for (unsigned round = 1; round <= params_.repair_rounds; ++round) {
      for (char action : {'a', 'b', 'c'}) {
        const std::uint64_t stream = kRepairStream + 3 * round + (action - 'a');
        const std::string tag = "round " + std::to_string(round) + " (" +
                                std::string(1, action) + ") ";
        Snapshot before = save();
        std::string what;
        if (action == 'a') {
          if (result_.trace.trees.empty()) continue;
          if (!grow_trees(derive_seed(seed_, stream))) {
            log.push_back(tag + "regrow trees failed: " + last_tree_error_);
            restore(std::move(before));
            continue;
          }
          what = "regrew trees";
        } else if (action == 'b') {
          const auto& links = result_.trace.leaf_link_edges;
          if (links.empty()) continue;
          const Edge e = links[(round - 1) % links.size()];
          const auto it = std::find(flipped_.begin(), flipped_.end(), e);
          if (it == flipped_.end())
            flipped_.push_back(e);
          else
            flipped_.erase(it);
          std::sort(flipped_.begin(), flipped_.end());
          what = "flipped leaf link " + describe(e);
        } else {
          auto cycle = posa_hamiltonian_cycle(
              g_, result_.trace.matching.v1, derive_seed(seed_, stream),
              params_.posa);
          if (!cycle) {
            log.push_back(tag + "cycle search found nothing");
            continue;
          }
          result_.trace.hamiltonian_cycle = std::move(*cycle);
          base_ = color_cycle_and_matching(g_, result_.trace.hamiltonian_cycle,
                                           result_.trace.matching);
          flipped_.clear();
          if (!result_.trace.trees.empty() &&
              !grow_trees(derive_seed(seed_, stream + 1000))) {
            log.push_back(tag + "new cycle, but tree growth failed: " +
                          last_tree_error_);
            restore(std::move(before));
            continue;
          }
          what = "new Hamiltonian cycle";
        }

        auto candidate = assemble();
        const auto recheck = check_pairs(g_, candidate, report.failing_pairs);
        if (recheck.failing_pairs.size() >= report.failing_pairs.size()) {
          log.push_back(tag + what + ": no improvement, reverted");
          restore(std::move(before));
          coloring = assemble();
          continue;
        }
        coloring = std::move(candidate);
        if (!recheck.properly_connected) {
          log.push_back(tag + what + ": " +
                        std::to_string(recheck.failing_pairs.size()) +
                        " pairs still failing");
          report = recheck;
          continue;
        }
        VerifyOptions full;
        full.early_exit = false;
        report = is_properly_connected(g_, coloring, full);
        log.push_back(tag + what + ": " +
                      std::to_string(report.failing_pairs.size()) +
                      " pairs failing in full check");
        if (report.properly_connected) return true;
      }
    }
    return false;
  }

  const Graph& g_;
  const ConstructionParams& params_;
  std::uint64_t seed_;
  ConstructionResult result_;
  Graph h_;
  std::vector<Vertex> roots_;
  PartialColoring base_;
  std::vector<Edge> flipped_;
  std::string last_tree_error_;
};

}  // namespace

ConstructionResult construct_two_coloring(const Graph& g,
                                          const ConstructionParams& params,
                                          std::uint64_t seed) {
  return Pipeline(g, params, seed).run();
}

}  // namespace pcolor
