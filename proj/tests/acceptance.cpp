// Acceptance suite: one PASS/FAIL line per criterion. Run all criteria, or a
// single one with --criterion N (that is how ctest registers them).

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json_report.hpp"
#include "oracles.hpp"
#include "pcolor/diagnostics.hpp"
#include "pcolor/exact_pc.hpp"
#include "pcolor/experiment.hpp"
#include "pcolor/graph_io.hpp"
#include "pcolor/proper_path.hpp"
#include "pcolor/subgraph_coloring.hpp"
#include "pcolor/two_coloring.hpp"

using namespace pcolor;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

// 1. pc(K_n) = 1 for n = 2..7 and pc(K_{1,m}) = m for m = 1..5, each < 5 s.
Outcome closed_forms() {
  std::vector<std::string> bad;
  double slowest = 0;
  auto check = [&](const std::string& name, const Graph& g, Color want) {
    const auto start = Clock::now();
    const Color got = pc_exact(g).value;
    const double s = seconds_since(start);
    slowest = std::max(slowest, s);
    if (got != want || s >= 5.0)
      bad.push_back(fmt("%s=%u (want %u, %.2fs)", name.c_str(), got, want, s));
  };
  for (std::size_t n = 2; n <= 7; ++n)
    check("K" + std::to_string(n), Graph::complete(n), 1);
  for (Color m = 1; m <= 5; ++m)
    check("K1," + std::to_string(m), Graph::star(m), m);
  std::string detail = fmt("11 cases, slowest %.3fs", slowest);
  for (const auto& b : bad) detail += "; " + b;
  return {bad.empty(), detail};
}

// 2. Every non-complete connected labeled graph on 5 vertices with a
// Hamiltonian path has pc = 2; sweep < 10 min.
Outcome hamiltonian_path_oracle() {
  const auto start = Clock::now();
  std::size_t checked = 0, exceptions = 0;
  for (const Graph& g : oracle::connected_labeled_graphs(5)) {
    if (g.is_complete() || !oracle::has_hamiltonian_path(g)) continue;
    ++checked;
    if (pc_exact(g).value != 2) ++exceptions;
  }
  const double s = seconds_since(start);
  return {exceptions == 0 && checked > 0 && s < 600.0,
          fmt("%zu graphs with a Hamiltonian path, %zu exceptions, %.2fs",
              checked, exceptions, s)};
}

// 3. 2-connected diameter-2 samples of G(7, 0.5), seeds 0..49, have pc = 2.
Outcome diameter_two_oracle() {
  SearchBudget budget;
  budget.max_edges_two_colors = 21;  // every graph on 7 vertices
  std::size_t qualifying = 0, exceptions = 0;
  const auto start = Clock::now();
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = gnp_sample({7, 0.5, seed});
    if (!is_2_connected(g) || diameter(g) != 2) continue;
    ++qualifying;
    if (pc_exact(g, budget).value != 2) ++exceptions;
  }
  return {exceptions == 0 && qualifying > 0,
          fmt("%zu of 50 samples qualify, %zu exceptions, %.2fs", qualifying,
              exceptions, seconds_since(start))};
}

// 4. n=4 census equals the exhaustive oracle and {1:1, 2:33, 3:4}/38;
// n=5 pc=2 fraction >= 0.95.
Outcome census() {
  std::map<Color, std::size_t> oracle4;
  for (const Graph& g : oracle::connected_labeled_graphs(4))
    ++oracle4[oracle::exhaustive_pc(g)];
  const auto four = census_small_graphs(4);
  const std::map<Color, std::size_t> expected{{1, 1}, {2, 33}, {3, 4}};
  const bool four_ok = four.connected_graphs == 38 &&
                       four.histogram == expected && oracle4 == expected;

  const auto five = census_small_graphs(5);
  const auto two = five.histogram.count(2) ? five.histogram.at(2) : 0;
  const double fraction =
      static_cast<double>(two) / static_cast<double>(five.connected_graphs);
  std::string hist;
  for (const auto& [pc, count] : five.histogram)
    hist += fmt("%s%u:%zu", hist.empty() ? "" : ",", pc, count);
  return {four_ok && fraction >= 0.95,
          fmt("n=4 %s; n=5 {%s}/%zu, pc=2 fraction %.4f (need >= 0.95)",
              four_ok ? "matches" : "MISMATCH", hist.c_str(),
              five.connected_graphs, fraction)};
}

// 5. proper_path_exists agrees with the brute-force oracle on all connected
// labeled graphs with n <= 5 under 10 random 2-colorings each.
Outcome verifier_equivalence() {
  SplitMix64 rng(0x5eed);
  std::size_t queries = 0, disagreements = 0;
  for (std::size_t n = 2; n <= 5; ++n)
    for (const Graph& g : oracle::connected_labeled_graphs(n))
      for (int trial = 0; trial < 10; ++trial) {
        const auto raw = oracle::random_colors(g.edge_count(), 2, rng);
        const EdgeColoring c(raw, 2);
        for (Vertex u = 0; u < n; ++u)
          for (Vertex v = u + 1; v < n; ++v) {
            ++queries;
            const auto path = proper_path_exists(g, c, u, v);
            const bool expected = oracle::proper_path(g, raw, u, v);
            if (path.has_value() != expected ||
                (path && !oracle::valid_proper_path(g, raw, *path)))
              ++disagreements;
          }
      }
  return {disagreements == 0 && queries >= 7000,
          fmt("%zu pair queries, %zu disagreements", queries, disagreements)};
}

struct Trial {
  bool verified = false;
  bool invariants = false;
  double seconds = 0;
  std::string coloring_file;
  std::string trace;
};

bool check_invariants(const Graph& g, const EdgeColoring& c,
                      const ConstructionTrace& t) {
  const auto& cyc = t.hamiltonian_cycle;
  if (cyc.size() < 4) return false;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    const auto a = g.edge_id(cyc[i], cyc[(i + 1) % cyc.size()]);
    const auto b = g.edge_id(cyc[(i + 1) % cyc.size()], cyc[(i + 2) % cyc.size()]);
    if (!a || !b || c[*a] == c[*b]) return false;
  }
  for (const auto& pair : t.matching.pairs)
    if (c[*g.edge_id(pair.large, pair.small)] != 1) return false;
  if (t.matching.parity_edge &&
      c[*g.edge_id(t.matching.parity_edge->u, t.matching.parity_edge->v)] != 1)
    return false;
  return true;
}

std::vector<Trial> construction_trials() {
  const std::size_t n = 2000;
  const double p = edge_probability(PFormula::Hamilton, n, 2.0);
  std::vector<Trial> out;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Trial trial;
    const auto start = Clock::now();
    const Graph g = gnp_sample({n, p, seed});
    if (is_connected(g)) {
      const auto r = construct_two_coloring(g, {}, derive_seed(seed, 0));
      trial.trace = report::trace_json(r.trace).dump();
      if (r.coloring && r.coloring->palette_size() == 2 &&
          is_properly_connected(g, *r.coloring).properly_connected) {
        trial.verified = true;
        trial.invariants = check_invariants(g, *r.coloring, r.trace);
        trial.coloring_file = write_coloring(g, *r.coloring);
      }
    }
    trial.seconds = seconds_since(start);
    out.push_back(std::move(trial));
  }
  return out;
}

// 6. n = 2000, p = (ln n + ln ln n + 2)/n, seeds 0..29: >= 90% verified
// 2-colorings, each trial < 10 s, invariants hold on every success.
Outcome construction() {
  const auto trials = construction_trials();
  std::size_t verified = 0, broken = 0, slow = 0;
  double slowest = 0;
  for (const auto& t : trials) {
    verified += t.verified;
    broken += t.verified && !t.invariants;
    slow += t.seconds >= 10.0;
    slowest = std::max(slowest, t.seconds);
  }
  return {verified * 10 >= trials.size() * 9 && broken == 0 && slow == 0,
          fmt("%zu/%zu verified, %zu invariant violations, slowest %.2fs",
              verified, trials.size(), broken, slowest)};
}

// 7. n = 10^4, p = (ln n + 2)/n, seeds 0..9: all diagnostic clauses pass in
// >= 9 runs, each run < 30 s.
Outcome diagnostics() {
  const std::size_t n = 10000;
  const double p = edge_probability(PFormula::Connect, n, 2.0);
  std::size_t clean = 0, slow = 0;
  std::map<std::string, std::size_t> failures;
  double slowest = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto start = Clock::now();
    const Graph g = gnp_sample({n, p, seed});
    const auto r = lemma_diagnostics(g, classify_vertices(g, 0.01), p, seed);
    const double s = seconds_since(start);
    slowest = std::max(slowest, s);
    slow += s >= 30.0;
    clean += r.all_passed();
    for (const auto& c : r.clauses)
      if (!c.passed) ++failures[c.name];
  }
  std::string detail = fmt("%zu/10 runs pass every clause, slowest %.2fs", clean, slowest);
  for (const auto& [name, count] : failures)
    detail += fmt("; %s failed in %zu runs", name.c_str(), count);
  return {clean >= 9 && slow == 0, detail};
}

// 8. Tree pairs on K4, K5, Q4 give verified <= 4-colorings with t = 0; the
// full overlap on P3 (t = 2) gives a verified <= 6-coloring.
Outcome two_subgraphs() {
  std::vector<std::string> notes;
  bool ok = true;
  const std::pair<const char*, Graph> cases[] = {
      {"K4", Graph::complete(4)}, {"K5", Graph::complete(5)}, {"Q4", Graph::hypercube(4)}};
  for (const auto& [name, g] : cases) {
    const auto trees = find_two_edge_disjoint_spanning_trees(g);
    if (!trees) {
      ok = false;
      notes.push_back(std::string(name) + " no tree pair");
      continue;
    }
    const auto r = color_via_two_subgraphs(g, trees->first, trees->second);
    const bool good = r.shared == 0 && r.coloring.palette_size() <= 4 &&
                      is_properly_connected(g, r.coloring).properly_connected;
    ok = ok && good;
    notes.push_back(fmt("%s t=%zu palette %u %s", name, r.shared,
                        r.coloring.palette_size(), good ? "verified" : "REJECTED"));
  }
  const Graph p3 = Graph::path(3);
  const std::vector<Edge> tree{{0, 1}, {1, 2}};
  const auto r = color_via_two_subgraphs(p3, tree, tree);
  const bool good = r.shared == 2 && r.coloring.palette_size() <= 6 &&
                    is_properly_connected(p3, r.coloring).properly_connected;
  ok = ok && good;
  notes.push_back(fmt("P3 t=%zu palette %u %s", r.shared, r.coloring.palette_size(),
                      good ? "verified" : "REJECTED"));
  std::string detail;
  for (const auto& n : notes) detail += (detail.empty() ? "" : "; ") + n;
  return {ok, detail};
}

// 9. n = 1000, a in {-3, 0, 4}, 50 trials: connected fraction within 0.15 of
// exp(-exp(-a)).
Outcome threshold_curve() {
  ExperimentConfig cfg;
  cfg.n = 1000;
  cfg.formula = PFormula::Connect;
  cfg.offsets = {-3.0, 0.0, 4.0};
  cfg.trials = 50;
  cfg.seed = 0;
  cfg.threads = std::max(1u, std::thread::hardware_concurrency());
  cfg.construct = false;
  const auto report = run_threshold_experiment(cfg);
  bool ok = true;
  std::string detail;
  for (const auto& s : report.summaries) {
    const double limit = std::exp(-std::exp(-s.a));
    const double frac = s.connected_fraction();
    ok = ok && std::abs(frac - limit) <= 0.15;
    detail += fmt("%sa=%+.0f: %.2f vs %.3f", detail.empty() ? "" : "; ", s.a,
                  frac, limit);
  }
  return {ok, detail};
}

// 10. Repeating the construction run gives byte-identical colorings and traces.
Outcome determinism() {
  const auto first = construction_trials();
  const auto second = construction_trials();
  std::size_t differing = 0;
  for (std::size_t i = 0; i < first.size(); ++i)
    differing += first[i].coloring_file != second[i].coloring_file ||
                 first[i].trace != second[i].trace;
  return {differing == 0,
          fmt("%zu of %zu trials differ between runs", differing, first.size())};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"closed forms for complete graphs and stars", closed_forms},
      {"Hamiltonian-path graphs on 5 vertices have pc 2", hamiltonian_path_oracle},
      {"2-connected diameter-2 samples have pc 2", diameter_two_oracle},
      {"small-graph census", census},
      {"verifier agrees with brute force", verifier_equivalence},
      {"two-coloring construction at n=2000", construction},
      {"structural diagnostics at n=10^4", diagnostics},
      {"two-subgraph colorings", two_subgraphs},
      {"connectivity threshold curve", threshold_curve},
      {"deterministic construction output", determinism},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-10)")
      ->check(CLI::Range(1, static_cast<int>(criteria().size())));
  CLI11_PARSE(app, argc, argv);

  int failures = 0;
  for (std::size_t i = 0; i < criteria().size(); ++i) {
    if (only != 0 && static_cast<int>(i + 1) != only) continue;
    const auto& c = criteria()[i];
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] criterion %zu: %s (%s) [%.1fs]\n", o.pass ? "PASS" : "FAIL",
                i + 1, c.name, o.detail.c_str(), seconds_since(start));
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
