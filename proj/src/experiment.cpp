#include "pcolor/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <thread>

#include "pcolor/error.hpp"
#include "pcolor/rng.hpp"

namespace pcolor {

double edge_probability(PFormula formula, std::size_t n, double a) {
  const double ln_n = std::log(static_cast<double>(n));
  double numerator = ln_n + a;
  if (formula == PFormula::Hamilton) numerator += std::log(ln_n);
  return std::clamp(numerator / static_cast<double>(n), 0.0, 1.0);
}

double OffsetSummary::connected_fraction() const {
  return trials == 0 ? 0.0 : static_cast<double>(connected) / trials;
}

double OffsetSummary::success_fraction() const {
  return trials == 0 ? 0.0 : static_cast<double>(pc_le_2) / trials;
}

namespace {

TrialRecord run_trial(const ExperimentConfig& config, double a,
                      std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  TrialRecord r;
  r.n = config.n;
  r.a = a;
  r.p = edge_probability(config.formula, config.n, a);
  r.seed = seed;
  const Graph g = gnp_sample({config.n, r.p, seed});
  r.connected = is_connected(g);
  if (!r.connected) {
    r.stage = "NotConnected";
  } else if (!config.construct) {
    r.stage = "Skipped";
  } else {
    try {
      const auto result =
          construct_two_coloring(g, config.construction, derive_seed(seed, 0));
      r.ham_found = !result.trace.hamiltonian_cycle.empty();
      r.stage = result.trace.outcome();
      r.pc_le_2 = result.coloring.has_value();
    } catch (const Error& e) {
      r.stage = "Error(" + std::string(error_kind_name(e.kind())) + ")";
    }
  }
  r.ms = std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
             .count();
  return r;
}

}  // namespace

TrialReport run_threshold_experiment(const ExperimentConfig& config) {
  if (config.trials == 0)
    throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
  if (config.n < 3)
    throw Error(ErrorKind::InvalidArgument, "n must be at least 3");
  if (config.offsets.empty())
    throw Error(ErrorKind::InvalidArgument, "no offsets given");

  TrialReport report;
  report.config = config;
  const std::size_t total = config.offsets.size() * config.trials;
  report.records.resize(total);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t job = next++; job < total; job = next++) {
      const double a = config.offsets[job / config.trials];
      report.records[job] = run_trial(config, a, derive_seed(config.seed, job));
    }
  };
  const unsigned threads =
      std::max(1u, std::min<unsigned>(config.threads,
                                      static_cast<unsigned>(total)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t k = 0; k < config.offsets.size(); ++k) {
    OffsetSummary s;
    s.a = config.offsets[k];
    s.p = edge_probability(config.formula, config.n, s.a);
    for (std::size_t i = 0; i < config.trials; ++i) {
      const auto& r = report.records[k * config.trials + i];
      ++s.trials;
      s.connected += r.connected;
      s.ham_found += r.ham_found;
      s.pc_le_2 += r.pc_le_2;
      ++s.stages[r.stage];
    }
    report.summaries.push_back(std::move(s));
  }
  return report;
}

std::string trial_csv(const TrialReport& report) {
  std::string out = "n,p,a,seed,connected,ham_found,stage,pc_le_2,ms\n";
  char buffer[256];
  for (const auto& r : report.records) {
    std::snprintf(buffer, sizeof buffer, "%zu,%.17g,%.17g,%llu,%d,%d,", r.n,
                  r.p, r.a, static_cast<unsigned long long>(r.seed),
                  r.connected ? 1 : 0, r.ham_found ? 1 : 0);
    out += buffer;
    out += r.stage;
    std::snprintf(buffer, sizeof buffer, ",%d,%.3f\n", r.pc_le_2 ? 1 : 0,
                  r.ms);
    out += buffer;
  }
  return out;
}

CensusResult census_small_graphs(std::size_t n) {
  if (n < 2 || n > 5)
    throw Error(ErrorKind::InvalidArgument,
                "census supports 2 <= n <= 5, got " + std::to_string(n));
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

  CensusResult result;
  result.n = n;
  result.labeled_graphs = std::size_t{1} << pairs.size();
  std::vector<Edge> edges;
  for (std::size_t mask = 0; mask < result.labeled_graphs; ++mask) {
    edges.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) edges.push_back(pairs[i]);
    const Graph g = Graph::from_edges(n, edges);
    if (!is_connected(g)) continue;
    ++result.connected_graphs;
    ++result.histogram[pc_exact(g).value];
  }
  return result;
}

}  // namespace pcolor
