#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "pcolor/error.hpp"
#include "pcolor/experiment.hpp"

using namespace pcolor;

namespace {

std::map<Color, std::size_t> oracle_census(std::size_t n) {
  std::map<Color, std::size_t> histogram;
  for (const Graph& g : oracle::connected_labeled_graphs(n))
    ++histogram[oracle::exhaustive_pc(g)];
  return histogram;
}

}  // namespace

TEST(EdgeProbability, Formulas) {
  const double ln = std::log(1000.0);
  EXPECT_DOUBLE_EQ(edge_probability(PFormula::Connect, 1000, 2), (ln + 2) / 1000);
  EXPECT_DOUBLE_EQ(edge_probability(PFormula::Hamilton, 1000, 2),
                   (ln + std::log(ln) + 2) / 1000);
  EXPECT_EQ(edge_probability(PFormula::Connect, 10, -100), 0.0);
  EXPECT_EQ(edge_probability(PFormula::Connect, 10, 100), 1.0);
}

TEST(Census, MatchesExhaustiveOracle) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto r = census_small_graphs(n);
    EXPECT_EQ(r.histogram, oracle_census(n)) << n;
    std::size_t total = 0;
    for (const auto& [pc, count] : r.histogram) total += count;
    EXPECT_EQ(total, r.connected_graphs);
    EXPECT_EQ(r.labeled_graphs, std::size_t{1} << (n * (n - 1) / 2));
  }
}

TEST(Census, KnownCounts) {
  EXPECT_EQ(census_small_graphs(2).histogram, (std::map<Color, std::size_t>{{1, 1}}));
  EXPECT_EQ(census_small_graphs(3).histogram,
            (std::map<Color, std::size_t>{{1, 1}, {2, 3}}));
  const auto four = census_small_graphs(4);
  EXPECT_EQ(four.connected_graphs, 38u);
  EXPECT_EQ(four.histogram, (std::map<Color, std::size_t>{{1, 1}, {2, 33}, {3, 4}}));
  EXPECT_EQ(census_small_graphs(5).connected_graphs, 728u);
}

TEST(Census, RejectsLargeOrders) {
  EXPECT_THROW(census_small_graphs(6), Error);
  EXPECT_THROW(census_small_graphs(1), Error);
}

TEST(Experiment, RecordsAndSummaries) {
  ExperimentConfig cfg;
  cfg.n = 200;
  cfg.formula = PFormula::Hamilton;
  cfg.offsets = {-1, 3};
  cfg.trials = 4;
  cfg.seed = 5;
  const auto r = run_threshold_experiment(cfg);
  ASSERT_EQ(r.records.size(), 8u);
  ASSERT_EQ(r.summaries.size(), 2u);
  for (const auto& s : r.summaries) {
    EXPECT_EQ(s.trials, 4u);
    std::size_t staged = 0;
    for (const auto& [name, count] : s.stages) staged += count;
    EXPECT_EQ(staged, 4u);
    EXPECT_LE(s.pc_le_2, s.connected);
  }
  for (const auto& rec : r.records) {
    if (!rec.connected) EXPECT_EQ(rec.stage, "NotConnected");
    if (rec.pc_le_2) EXPECT_EQ(rec.stage, "Verified");
  }
}

TEST(Experiment, ThreadCountDoesNotChangeResults) {
  ExperimentConfig cfg;
  cfg.n = 150;
  cfg.offsets = {0, 2};
  cfg.trials = 6;
  cfg.seed = 9;
  auto serial = run_threshold_experiment(cfg);
  cfg.threads = 4;
  auto threaded = run_threshold_experiment(cfg);
  ASSERT_EQ(serial.records.size(), threaded.records.size());
  for (std::size_t i = 0; i < serial.records.size(); ++i) {
    EXPECT_EQ(serial.records[i].seed, threaded.records[i].seed);
    EXPECT_EQ(serial.records[i].connected, threaded.records[i].connected);
    EXPECT_EQ(serial.records[i].stage, threaded.records[i].stage);
  }
}

TEST(Experiment, CsvLayout) {
  ExperimentConfig cfg;
  cfg.n = 50;
  cfg.offsets = {0};
  cfg.trials = 3;
  cfg.construct = false;
  const auto r = run_threshold_experiment(cfg);
  std::istringstream csv(trial_csv(r));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "n,p,a,seed,connected,ham_found,stage,pc_le_2,ms");
  std::size_t rows = 0;
  while (std::getline(csv, line)) {
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 8);
    ++rows;
  }
  EXPECT_EQ(rows, 3u);
  for (const auto& rec : r.records)
    if (rec.connected) EXPECT_EQ(rec.stage, "Skipped");
}
