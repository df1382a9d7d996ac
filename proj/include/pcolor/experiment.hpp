#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pcolor/exact_pc.hpp"
#include "pcolor/two_coloring.hpp"

namespace pcolor {

enum class PFormula {
  Connect,   ///< p = (ln n + a) / n
  Hamilton,  ///< p = (ln n + ln ln n + a) / n
};

/// Edge probability for offset a, clamped to [0, 1].
double edge_probability(PFormula formula, std::size_t n, double a);

struct ExperimentConfig {
  std::size_t n = 1000;
  PFormula formula = PFormula::Connect;
  std::vector<double> offsets;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  /// When false only connectivity is recorded (stage "Skipped").
  bool construct = true;
  ConstructionParams construction;
};

struct TrialRecord {
  std::size_t n = 0;
  double p = 0;
  double a = 0;
  std::uint64_t seed = 0;
  bool connected = false;
  bool ham_found = false;
  /// Construction outcome ("Verified", "Failed(<stage>)"), "NotConnected"
  /// or "Skipped".
  std::string stage;
  bool pc_le_2 = false;
  /// Wall time in milliseconds; the only field that varies between runs.
  double ms = 0;
};

struct OffsetSummary {
  double a = 0;
  double p = 0;
  std::size_t trials = 0;
  std::size_t connected = 0;
  std::size_t ham_found = 0;
  std::size_t pc_le_2 = 0;
  std::map<std::string, std::size_t> stages;

  double connected_fraction() const;
  double success_fraction() const;
};

struct TrialReport {
  ExperimentConfig config;
  /// Offset-major, then trial index.
  std::vector<TrialRecord> records;
  std::vector<OffsetSummary> summaries;
};

/// Trial i of offset k samples G(n, p) with seed derive_seed(seed, k *
/// trials + i) and runs the construction with derive_seed(that seed, 0).
/// Trials run on `threads` workers; results do not depend on the count.
/// Throws InvalidArgument for trials = 0, n < 3 or an empty offset list.
TrialReport run_threshold_experiment(const ExperimentConfig& config);

/// Header `n,p,a,seed,connected,ham_found,stage,pc_le_2,ms`, one row per
/// record, booleans as 0/1.
std::string trial_csv(const TrialReport& report);

struct CensusResult {
  std::size_t n = 0;
  std::size_t labeled_graphs = 0;
  std::size_t connected_graphs = 0;
  std::map<Color, std::size_t> histogram;
};

/// pc_exact over every connected labeled graph on n vertices, 2 <= n <= 5.
CensusResult census_small_graphs(std::size_t n);

}  // namespace pcolor
