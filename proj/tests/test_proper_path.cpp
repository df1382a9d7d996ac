#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "pcolor/proper_path.hpp"

using namespace pcolor;

namespace {

EdgeColoring colors_of(std::vector<Color> c, Color k) {
  return EdgeColoring(std::move(c), k);
}

// C4 with edge (01)=1, (12)=1, (23)=2, (30)=2; edge order is 01,03,12,23.
EdgeColoring c4_coloring() { return colors_of({1, 2, 1, 2}, 2); }

std::vector<Color> to_vector(const EdgeColoring& c) {
  return {c.colors().begin(), c.colors().end()};
}

}  // namespace

TEST(IsProperPath, Examples) {
  const Graph p3 = Graph::path(3);
  EXPECT_TRUE(is_proper_path(p3, colors_of({1, 2}, 2), {0, 1, 2}));
  EXPECT_FALSE(is_proper_path(p3, colors_of({1, 1}, 1), {0, 1, 2}));
  EXPECT_TRUE(is_proper_path(Graph::path(2), colors_of({1}, 1), {1, 0}));
  EXPECT_FALSE(is_proper_path(p3, colors_of({1, 2}, 2), {0, 2}));
  EXPECT_FALSE(is_proper_path(Graph::cycle(4), c4_coloring(), {0, 1, 0}));
}

TEST(WalkReach, Examples) {
  auto sorted = [](std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  EXPECT_EQ(sorted(proper_walk_reachable(Graph::complete(3),
                                         colors_of({1, 1, 1}, 1), 0)),
            (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(sorted(proper_walk_reachable(Graph::path(3), colors_of({1, 1}, 1), 0)),
            (std::vector<Vertex>{0, 1}));
  // From 0 the walk 0-1 (1) cannot continue to 2 over (12)=1 and 0-3 (2)
  // cannot continue over (23)=2, so vertex 2 is unreachable.
  EXPECT_EQ(sorted(proper_walk_reachable(Graph::cycle(4), c4_coloring(), 0)),
            (std::vector<Vertex>{0, 1, 3}));
}

TEST(ProperPathExists, Examples) {
  const auto k4 = proper_path_exists(Graph::complete(4),
                                     colors_of(std::vector<Color>(6, 1), 1), 0, 3);
  ASSERT_TRUE(k4);
  EXPECT_EQ(*k4, (Path{0, 3}));

  EXPECT_FALSE(proper_path_exists(Graph::cycle(4), c4_coloring(), 0, 2));

  const auto p5 = proper_path_exists(Graph::path(5), colors_of({1, 2, 1, 2}, 2), 0, 4);
  ASSERT_TRUE(p5);
  EXPECT_EQ(*p5, (Path{0, 1, 2, 3, 4}));
}

// A walk exists here but every simple path repeats a color: the walk
// 0-1-2-3-1-4 revisits 1. Edges: 01=1, 12=2, 23=1, 13=2, 14=1.
TEST(ProperPathExists, WalkWithoutSimplePath) {
  const Edge raw[] = {{0, 1}, {1, 2}, {2, 3}, {1, 3}, {1, 4}};
  const Graph g = Graph::from_edges(5, raw);
  std::vector<Color> c(g.edge_count());
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge e = g.edge(id);
    c[id] = (e == Edge(1, 2) || e == Edge(1, 3)) ? 2 : 1;
  }
  const EdgeColoring coloring(c, 2);
  const auto reach = proper_walk_reachable(g, coloring, 0);
  EXPECT_NE(std::find(reach.begin(), reach.end(), 4), reach.end());
  EXPECT_FALSE(oracle::proper_path(g, c, 0, 4));
  EXPECT_FALSE(proper_path_exists(g, coloring, 0, 4));
  EXPECT_FALSE(proper_path_by_matching(g, coloring, 0, 4));
}

// The path 1-2-0-3 (colors 2,1,2) needs the matching search to expand a
// blossom nested inside another one.
TEST(ProperPathByMatching, NestedBlossom) {
  const Edge raw[] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}};
  const Graph g = Graph::from_edges(5, raw);
  const std::vector<Color> c = {2, 1, 2, 3, 2};
  const auto path = proper_path_by_matching(g, EdgeColoring(c, 3), 1, 3);
  ASSERT_TRUE(path);
  EXPECT_EQ(*path, (Path{1, 2, 0, 3}));
}

TEST(ProperlyConnected, Examples) {
  EXPECT_TRUE(is_properly_connected(Graph::complete(5),
                                    colors_of(std::vector<Color>(10, 1), 1))
                  .properly_connected);

  const auto p3 = is_properly_connected(Graph::path(3), colors_of({1, 1}, 1));
  EXPECT_FALSE(p3.properly_connected);
  EXPECT_EQ(p3.failing_pairs, std::vector<Edge>{Edge(0, 2)});

  // C5 colored 1,2,1,2,1 walking around 0-1-2-3-4-0; edge order 01,04,12,23,34.
  const Graph c5 = Graph::cycle(5);
  const std::vector<Color> around = {1, 1, 2, 1, 2};
  EXPECT_TRUE(oracle::properly_connected(c5, around));
  EXPECT_TRUE(is_properly_connected(c5, EdgeColoring(around, 2)).properly_connected);
}

TEST(ProperlyConnected, FullReportAndCertificates) {
  const Graph g = Graph::cycle(4);
  VerifyOptions opts;
  opts.early_exit = false;
  opts.certificates = true;
  const auto r = is_properly_connected(g, c4_coloring(), opts);
  EXPECT_FALSE(r.properly_connected);
  EXPECT_EQ(r.pair_count_checked, 6u);
  EXPECT_EQ(r.failing_pairs, std::vector<Edge>{Edge(0, 2)});
  EXPECT_EQ(r.certificates.size(), 5u);
  for (const auto& [pair, path] : r.certificates) {
    EXPECT_TRUE(oracle::valid_proper_path(g, to_vector(c4_coloring()), path));
    EXPECT_EQ(Edge(path.front(), path.back()), pair);
  }
}

TEST(ProperlyConnected, ThreadedMatchesSerial) {
  const Graph g = gnp_sample({60, 0.08, 4});
  SplitMix64 rng(17);
  const EdgeColoring c(oracle::random_colors(g.edge_count(), 2, rng), 2);
  VerifyOptions serial;
  serial.early_exit = false;
  VerifyOptions threaded = serial;
  threaded.threads = 4;
  EXPECT_EQ(is_properly_connected(g, c, serial), is_properly_connected(g, c, threaded));
}

TEST(CheckPairs, SelectedPairsOnly) {
  const auto r = check_pairs(Graph::cycle(4), c4_coloring(),
                             {Edge(0, 1), Edge(0, 2)});
  EXPECT_EQ(r.pair_count_checked, 2u);
  EXPECT_EQ(r.failing_pairs, std::vector<Edge>{Edge(0, 2)});
}

// Every connected labeled graph on up to 5 vertices, 4 random colorings with
// 2 or 3 colors each, all pairs: both the default verifier and the matching
// search agree with the oracle, and returned paths are valid.
TEST(ProperPathExists, AgreesWithOracleOnSmallGraphs) {
  SplitMix64 rng(2024);
  std::size_t queries = 0;
  for (std::size_t n = 2; n <= 5; ++n)
    for (const Graph& g : oracle::connected_labeled_graphs(n))
      for (int trial = 0; trial < 4; ++trial) {
        const Color k = trial % 2 == 0 ? 2 : 3;
        const auto raw = oracle::random_colors(g.edge_count(), k, rng);
        const EdgeColoring c(raw, k);
        for (Vertex u = 0; u < n; ++u)
          for (Vertex v = u + 1; v < n; ++v) {
            const bool expected = oracle::proper_path(g, raw, u, v);
            const auto fast = proper_path_exists(g, c, u, v);
            const auto exact = proper_path_by_matching(g, c, u, v);
            ASSERT_EQ(fast.has_value(), expected);
            ASSERT_EQ(exact.has_value(), expected)
                << "n=" << n << " k=" << k << " pair " << u << "," << v;
            if (fast) {
              EXPECT_TRUE(oracle::valid_proper_path(g, raw, *fast));
              EXPECT_EQ(fast->front(), u);
              EXPECT_EQ(fast->back(), v);
            }
            if (exact) EXPECT_TRUE(oracle::valid_proper_path(g, raw, *exact));
            ++queries;
          }
      }
  EXPECT_GT(queries, 20000u);
}

// Larger random instances where walks and paths diverge more often; the
// oracle is still exhaustive at n = 9.
TEST(ProperPathExists, AgreesWithOracleOnSparseRandomGraphs) {
  SplitMix64 rng(99);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = gnp_sample({9, 0.35, seed});
    const auto raw = oracle::random_colors(g.edge_count(), 2, rng);
    const EdgeColoring c(raw, 2);
    for (Vertex u = 0; u < 9; ++u)
      for (Vertex v = u + 1; v < 9; ++v) {
        const bool expected = oracle::proper_path(g, raw, u, v);
        ASSERT_EQ(proper_path_exists(g, c, u, v).has_value(), expected);
        ASSERT_EQ(proper_path_by_matching(g, c, u, v).has_value(), expected);
      }
  }
}

TEST(BruteForce, MatchesOracle) {
  SplitMix64 rng(5);
  for (const Graph& g : oracle::connected_labeled_graphs(4)) {
    const auto raw = oracle::random_colors(g.edge_count(), 2, rng);
    const EdgeColoring c(raw, 2);
    for (Vertex u = 0; u < 4; ++u)
      for (Vertex v = u + 1; v < 4; ++v)
        EXPECT_EQ(brute_force_proper_path(g, c, u, v).has_value(),
                  oracle::proper_path(g, raw, u, v));
  }
}
