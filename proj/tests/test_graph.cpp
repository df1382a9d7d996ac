#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>

#include "oracles.hpp"
#include "pcolor/error.hpp"
#include "pcolor/graph.hpp"
#include "pcolor/graph_io.hpp"

using namespace pcolor;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no pcolor::Error thrown";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(Graph, EdgesAreNormalizedAndSorted) {
  const Edge raw[] = {{3, 1}, {0, 2}, {1, 0}};
  const Graph g = Graph::from_edges(4, raw);
  ASSERT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.edge(0), Edge(0, 1));
  EXPECT_EQ(g.edge(1), Edge(0, 2));
  EXPECT_EQ(g.edge(2), Edge(1, 3));
  EXPECT_EQ(g.edge_id(3, 1), EdgeId{2});
  EXPECT_FALSE(g.edge_id(2, 3).has_value());
  EXPECT_EQ(g.degree(1), 2u);
  EXPECT_EQ(g.max_degree(), 2u);
}

TEST(Graph, RejectsBadEdges) {
  const Edge loop[] = {{1, 1}};
  EXPECT_EQ(kind_of([&] { Graph::from_edges(3, loop); }), ErrorKind::SelfLoop);
  const Edge dup[] = {{0, 1}, {1, 0}};
  EXPECT_EQ(kind_of([&] { Graph::from_edges(3, dup); }),
            ErrorKind::DuplicateEdge);
  const Edge far[] = {{0, 5}};
  EXPECT_EQ(kind_of([&] { Graph::from_edges(3, far); }),
            ErrorKind::VertexOutOfRange);
}

TEST(Graph, Families) {
  EXPECT_EQ(Graph::complete(5).edge_count(), 10u);
  EXPECT_EQ(Graph::path(6).edge_count(), 5u);
  EXPECT_EQ(Graph::cycle(6).edge_count(), 6u);
  EXPECT_EQ(Graph::star(4).vertex_count(), 5u);
  EXPECT_EQ(Graph::star(4).max_degree(), 4u);
  const Graph q4 = Graph::hypercube(4);
  EXPECT_EQ(q4.vertex_count(), 16u);
  EXPECT_EQ(q4.edge_count(), 32u);
  for (Vertex v = 0; v < 16; ++v) EXPECT_EQ(q4.degree(v), 4u);
}

TEST(Sampler, DegenerateProbabilities) {
  EXPECT_EQ(gnp_sample({5, 0.0, 1}).edge_count(), 0u);
  EXPECT_EQ(gnp_sample({4, 1.0, 1}), Graph::complete(4));
}

TEST(Sampler, EdgeCountWithinBinomialWindow) {
  // mean 4995, sd ~70.3; the window is about 4 sd on each side.
  const auto m = gnp_sample({1000, 0.01, 42}).edge_count();
  EXPECT_GE(m, 4700u);
  EXPECT_LE(m, 5300u);
}

TEST(Sampler, PathsAgreeInDistribution) {
  // Both samplers over 40 seeds: mean edge count near C(200,2) * 0.05 = 995.
  for (auto path : {SamplerPath::GeometricSkip, SamplerPath::Bernoulli}) {
    double total = 0;
    for (std::uint64_t s = 0; s < 40; ++s)
      total += static_cast<double>(gnp_sample({200, 0.05, s}, path).edge_count());
    EXPECT_NEAR(total / 40, 995.0, 4 * std::sqrt(19900 * 0.05 * 0.95 / 40));
  }
}

TEST(Sampler, SameSeedSameGraph) {
  EXPECT_EQ(gnp_sample({300, 0.03, 9}), gnp_sample({300, 0.03, 9}));
  EXPECT_NE(gnp_sample({300, 0.03, 9}), gnp_sample({300, 0.03, 10}));
}

TEST(Connectivity, Examples) {
  EXPECT_TRUE(is_connected(Graph::complete(3)));
  EXPECT_FALSE(is_connected(Graph(2)));
  EXPECT_TRUE(is_connected(Graph::path(6)));
}

TEST(Connectivity, MatchesOracleOnAllGraphsOfOrderFour) {
  for (const Graph& g : oracle::labeled_graphs(4))
    EXPECT_EQ(is_connected(g), oracle::connected(g));
}

TEST(Connectivity, ComponentLabels) {
  const Edge raw[] = {{0, 1}, {2, 3}};
  const auto labels = component_labels(Graph::from_edges(5, raw));
  EXPECT_EQ(labels[0], labels[1]);
  EXPECT_EQ(labels[2], labels[3]);
  EXPECT_NE(labels[0], labels[2]);
  EXPECT_NE(labels[4], labels[0]);
  EXPECT_NE(labels[4], labels[2]);
}

TEST(Diameter, Examples) {
  EXPECT_EQ(diameter(Graph::complete(5)), 1u);
  EXPECT_EQ(diameter(Graph::cycle(6)), 3u);
  EXPECT_EQ(diameter(Graph::path(4)), 3u);
  EXPECT_EQ(diameter(Graph(3)), kInfiniteDistance);
  const auto d = bfs_distances(Graph::path(4), 0);
  EXPECT_EQ(d, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(Biconnectivity, Examples) {
  EXPECT_TRUE(is_2_connected(Graph::cycle(4)));
  EXPECT_FALSE(is_2_connected(Graph::path(4)));
  // Paw: triangle 0-1-2 plus pendant 3 on vertex 0.
  const Edge paw[] = {{0, 1}, {1, 2}, {0, 2}, {0, 3}};
  const Graph g = Graph::from_edges(4, paw);
  EXPECT_FALSE(is_2_connected(g));
  EXPECT_EQ(articulation_points(g), std::vector<Vertex>{0});
}

TEST(Biconnectivity, MatchesVertexDeletionOracle) {
  for (const Graph& g : oracle::labeled_graphs(5)) {
    bool expected = oracle::connected(g);
    for (Vertex x = 0; expected && x < 5; ++x) {
      std::vector<Edge> kept;
      for (const Edge& e : g.edges())
        if (e.u != x && e.v != x)
          kept.emplace_back(e.u > x ? e.u - 1 : e.u, e.v > x ? e.v - 1 : e.v);
      expected = oracle::connected(Graph::from_edges(4, kept));
    }
    EXPECT_EQ(is_2_connected(g), expected);
  }
}

TEST(GraphIo, ParsesAndRoundTrips) {
  const Graph g = read_graph("3 2\n0 1\n1 2");
  EXPECT_EQ(g, Graph::path(3));
  EXPECT_EQ(read_graph(write_graph(Graph::hypercube(3))), Graph::hypercube(3));
  EXPECT_EQ(read_graph("2 1\n\n0  1\r\n"), Graph::path(2));
}

TEST(GraphIo, ParseErrors) {
  EXPECT_EQ(kind_of([] { read_graph("3 2\n0 1\n"); }), ErrorKind::MalformedLine);
  EXPECT_EQ(kind_of([] { read_graph("3 1\n0 x\n"); }), ErrorKind::MalformedLine);
  EXPECT_EQ(kind_of([] { read_graph("3 1\n0 3\n"); }),
            ErrorKind::VertexOutOfRange);
  EXPECT_EQ(kind_of([] { read_graph("3 1\n1 1\n"); }), ErrorKind::SelfLoop);
  EXPECT_EQ(kind_of([] { read_graph("3 2\n0 1\n1 0\n"); }),
            ErrorKind::DuplicateEdge);
}

TEST(ColoringIo, RoundTripAndErrors) {
  const Graph g = Graph::path(3);
  const EdgeColoring c({1, 2}, 2);
  EXPECT_EQ(read_coloring(g, write_coloring(g, c)), c);
  EXPECT_EQ(read_coloring(g, "2\n1 2 2\n0 1 1\n"), c);
  EXPECT_EQ(kind_of([&] { read_coloring(g, "2\n0 1 1\n"); }),
            ErrorKind::MissingColor);
  EXPECT_EQ(kind_of([&] { read_coloring(g, "2\n0 1 3\n1 2 1\n"); }),
            ErrorKind::ColorOutOfRange);
  EXPECT_EQ(kind_of([&] { read_coloring(g, "2\n0 2 1\n1 2 1\n"); }),
            ErrorKind::EdgeNotInGraph);
  EXPECT_EQ(kind_of([&] { read_coloring(g, "2\n0 1 1\n1 0 2\n1 2 1\n"); }),
            ErrorKind::DuplicateEdge);
}

TEST(FileIo, AtomicWriteAndMissingFile) {
  const auto dir = std::filesystem::temp_directory_path() / "pcolor_test_io";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "g.txt").string();
  write_text_file_atomic(path, "2 1\n0 1\n");
  write_text_file_atomic(path, write_graph(Graph::path(3)));
  EXPECT_EQ(read_graph(read_text_file(path)), Graph::path(3));
  EXPECT_FALSE(std::filesystem::exists(path + ".tmp"));
  EXPECT_EQ(kind_of([&] { read_text_file((dir / "missing.txt").string()); }),
            ErrorKind::Io);
  std::filesystem::remove_all(dir);
}

TEST(Rng, SplitSeedsAreDistinctAndStable) {
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  SplitMix64 a(5), b(5);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.next(), b.next());
  SplitMix64 r(3);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(r.below(7), 7u);
}
