// pc: command-line front end over the C API.
//
// Exit codes: 0 success, 1 domain error (JSON object on stderr), 2 usage.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pcolor/pcolor.h"

namespace {

using nlohmann::json;

struct DomainError {
  pc_status status;
  std::string message;
};

struct UsageError {
  std::string message;
};

void check(pc_status s) {
  if (s != PC_OK) throw DomainError{s, pc_last_error()};
}

struct GraphFree {
  void operator()(pc_graph* g) const { pc_graph_free(g); }
};
struct ColoringFree {
  void operator()(pc_coloring* c) const { pc_coloring_free(c); }
};
using GraphPtr = std::unique_ptr<pc_graph, GraphFree>;
using ColoringPtr = std::unique_ptr<pc_coloring, ColoringFree>;

std::string take(char* s) {
  std::string out = s ? s : "";
  pc_string_free(s);
  return out;
}

GraphPtr load_graph(const std::string& path) {
  pc_graph* g = nullptr;
  check(pc_graph_load(path.c_str(), &g));
  return GraphPtr(g);
}

void write_atomic(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out.flush())
      throw DomainError{PC_ERR_IO, "cannot write '" + temp.string() + "'"};
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) throw DomainError{PC_ERR_IO, "cannot replace '" + path + "'"};
}

std::vector<uint32_t> edge_endpoints(const pc_graph* g) {
  std::vector<uint32_t> out(2 * pc_graph_edge_count(g));
  check(pc_graph_edges(g, out.data()));
  return out;
}

// "u,v" or "u,v;x,y;..." into a flat endpoint list.
std::vector<uint32_t> parse_pairs(const std::string& text) {
  std::vector<uint32_t> out;
  std::stringstream pairs(text);
  std::string pair;
  while (std::getline(pairs, pair, ';')) {
    const auto comma = pair.find(',');
    if (comma == std::string::npos)
      throw UsageError{"--pairs expects u,v[;u,v...], got '" + pair + "'"};
    try {
      out.push_back(static_cast<uint32_t>(std::stoul(pair.substr(0, comma))));
      out.push_back(static_cast<uint32_t>(std::stoul(pair.substr(comma + 1))));
    } catch (const std::exception&) {
      throw UsageError{"--pairs expects vertex numbers, got '" + pair + "'"};
    }
  }
  return out;
}

void print(const json& j) { std::cout << j.dump() << '\n'; }

// ---- subcommands -------------------------------------------------------

struct GenArgs {
  std::size_t n = 0;
  double p = 0;
  uint64_t seed = 0;
  std::string out;
};

void run_gen(const GenArgs& a) {
  pc_graph* raw = nullptr;
  check(pc_graph_sample(a.n, a.p, a.seed, &raw));
  GraphPtr g(raw);
  check(pc_graph_save(g.get(), a.out.c_str()));
  print({{"n", a.n},
         {"m", pc_graph_edge_count(g.get())},
         {"p", a.p},
         {"seed", a.seed},
         {"connected", pc_graph_is_connected(g.get()) != 0},
         {"out", a.out}});
}

struct VerifyArgs {
  std::string graph, coloring, pairs = "all";
  bool certificates = false, all_failing = false;
  unsigned threads = 1;
};

void run_verify(const VerifyArgs& a) {
  auto g = load_graph(a.graph);
  pc_coloring* raw = nullptr;
  check(pc_coloring_load(g.get(), a.coloring.c_str(), &raw));
  ColoringPtr c(raw);
  pc_verify_options o;
  pc_verify_options_default(&o);
  o.certificates = a.certificates;
  o.early_exit = !a.all_failing;
  o.threads = a.threads;
  std::vector<uint32_t> pairs;
  if (a.pairs != "all") {
    pairs = parse_pairs(a.pairs);
    o.pairs = pairs.data();
    o.pair_count = pairs.size() / 2;
  }
  char* out = nullptr;
  check(pc_verify(g.get(), c.get(), &o, &out));
  std::cout << take(out) << '\n';
}

struct SolveArgs {
  std::string graph, witness;
  uint32_t max_colors = 0;
  bool deterministic = false;
  std::optional<std::size_t> max_edges_two, max_edges_more;
};

void run_solve(const SolveArgs& a) {
  auto g = load_graph(a.graph);
  pc_solve_options o;
  pc_solve_options_default(&o);
  o.max_colors = a.max_colors;
  if (a.max_edges_two) o.max_edges_two_colors = *a.max_edges_two;
  if (a.max_edges_more) o.max_edges_more_colors = *a.max_edges_more;
  pc_coloring* raw = nullptr;
  char* out = nullptr;
  check(pc_solve(g.get(), &o, &raw, &out));
  ColoringPtr witness(raw);
  const std::string report = take(out);
  if (!a.witness.empty())
    check(pc_coloring_save(g.get(), witness.get(), a.witness.c_str()));
  std::cout << report << '\n';
}

struct ConstructArgs {
  std::string graph, p_formula = "hamilton", trace, out, graph_out;
  std::optional<std::size_t> n;
  double offset = 2.0;
  uint64_t seed = 0;
  bool paper_constants = false;
  uint32_t repair_rounds = 5;
};

void run_construct(const ConstructArgs& a) {
  if (a.graph.empty() == !a.n)
    throw UsageError{"construct needs exactly one of --graph or --n"};
  GraphPtr g;
  json source;
  if (!a.graph.empty()) {
    g = load_graph(a.graph);
    source = {{"graph", a.graph}};
  } else {
    const double n = static_cast<double>(*a.n);
    double p;
    if (a.p_formula == "threshold")
      p = (std::log(n) + a.offset) / n;
    else if (a.p_formula == "hamilton")
      p = (std::log(n) + std::log(std::log(n)) + a.offset) / n;
    else if (a.p_formula.rfind("explicit:", 0) == 0)
      try {
        p = std::stod(a.p_formula.substr(9));
      } catch (const std::exception&) {
        throw UsageError{"bad --p-formula '" + a.p_formula + "'"};
      }
    else
      throw UsageError{"--p-formula must be threshold, hamilton or explicit:P"};
    p = std::min(1.0, std::max(0.0, p));
    pc_graph* raw = nullptr;
    check(pc_graph_sample(*a.n, p, a.seed, &raw));
    g.reset(raw);
    source = {{"n", *a.n}, {"p", p}, {"p_formula", a.p_formula},
              {"offset", a.offset}};
    if (!a.graph_out.empty())
      check(pc_graph_save(g.get(), a.graph_out.c_str()));
  }
  pc_construct_options o;
  pc_construct_options_default(&o);
  o.paper_constants = a.paper_constants;
  o.repair_rounds = a.repair_rounds;
  pc_coloring* raw = nullptr;
  char* trace_text = nullptr;
  check(pc_construct(g.get(), &o, pc_derive_seed(a.seed, 0), &raw,
                     &trace_text));
  ColoringPtr coloring(raw);
  const std::string trace_str = take(trace_text);
  if (!a.trace.empty()) write_atomic(a.trace, trace_str + "\n");
  if (coloring && !a.out.empty())
    check(pc_coloring_save(g.get(), coloring.get(), a.out.c_str()));

  const json trace = json::parse(trace_str);
  print({{"source", source},
         {"seed", a.seed},
         {"vertices", pc_graph_vertex_count(g.get())},
         {"edges", pc_graph_edge_count(g.get())},
         {"outcome", trace["outcome"]},
         {"verified", trace["verified"]},
         {"palette", coloring ? pc_coloring_palette(coloring.get()) : 0},
         {"regime", trace["regime"]},
         {"small", trace["classification"]["small"]},
         {"trees", trace["trees"].size()},
         {"repair_actions", trace["repair_log"].size()},
         {"failure_reason", trace["failure_reason"]}});
}

struct TwoSubgraphArgs {
  std::string graph, e1, e2, out;
  bool find_trees = false;
  uint32_t root = 0;
};

void run_two_subgraphs(const TwoSubgraphArgs& a) {
  auto g = load_graph(a.graph);
  std::vector<uint32_t> first, second;
  if (a.find_trees) {
    if (!a.e1.empty() || !a.e2.empty())
      throw UsageError{"--find-trees cannot be combined with --e1/--e2"};
    pc_graph* t1 = nullptr;
    pc_graph* t2 = nullptr;
    check(pc_spanning_tree_pair(g.get(), &t1, &t2));
    GraphPtr tree1(t1), tree2(t2);
    if (!tree1) {
      print({{"found", false}});
      return;
    }
    first = edge_endpoints(tree1.get());
    second = edge_endpoints(tree2.get());
  } else {
    if (a.e1.empty() || a.e2.empty())
      throw UsageError{"two-subgraphs needs --e1 and --e2, or --find-trees"};
    first = edge_endpoints(load_graph(a.e1).get());
    second = edge_endpoints(load_graph(a.e2).get());
  }
  pc_coloring* raw = nullptr;
  char* out = nullptr;
  check(pc_two_subgraphs(g.get(), first.data(), first.size() / 2,
                         second.data(), second.size() / 2, a.root, &raw, &out));
  ColoringPtr coloring(raw);
  json report = json::parse(take(out));
  if (a.find_trees) report["found"] = true;
  if (!a.out.empty())
    check(pc_coloring_save(g.get(), coloring.get(), a.out.c_str()));
  print(report);
}

struct DiagnoseArgs {
  std::string graph;
  double p = 0, beta = 0.01, tau = 0;
  uint64_t seed = 0;
};

void run_diagnose(const DiagnoseArgs& a) {
  auto g = load_graph(a.graph);
  char* out = nullptr;
  check(pc_diagnose(g.get(), a.p, a.beta, a.tau, a.seed, &out));
  std::cout << take(out) << '\n';
}

struct ExperimentArgs {
  std::size_t n = 1000, trials = 10;
  std::string formula = "connect", out_csv, out_json;
  std::vector<double> offsets{0.0};
  uint64_t seed = 0;
  unsigned threads = 1;
  bool no_construct = false, paper_constants = false;
};

void run_experiment(const ExperimentArgs& a) {
  pc_experiment_options o{};
  o.n = a.n;
  if (a.formula == "connect")
    o.formula = PC_FORMULA_CONNECT;
  else if (a.formula == "hamilton")
    o.formula = PC_FORMULA_HAMILTON;
  else
    throw UsageError{"--formula must be connect or hamilton"};
  o.offsets = a.offsets.data();
  o.offset_count = a.offsets.size();
  o.trials = a.trials;
  o.seed = a.seed;
  o.threads = a.threads;
  o.construct = !a.no_construct;
  o.paper_constants = a.paper_constants;
  char* csv = nullptr;
  char* js = nullptr;
  check(pc_experiment(&o, &csv, &js));
  const std::string csv_text = take(csv), json_text = take(js);
  if (!a.out_csv.empty()) write_atomic(a.out_csv, csv_text);
  if (!a.out_json.empty()) write_atomic(a.out_json, json_text + "\n");
  std::cout << json_text << '\n';
}

struct CensusArgs {
  std::size_t n = 4;
  std::string out;
};

void run_census(const CensusArgs& a) {
  char* out = nullptr;
  check(pc_census(a.n, &out));
  const std::string text = take(out);
  if (!a.out.empty()) write_atomic(a.out, text + "\n");
  std::cout << text << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proper connection number toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pc_version());

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Sample G(n, p) to a graph file");
  gen_cmd->add_option("--n", gen.n, "Vertex count")->required();
  gen_cmd->add_option("--p", gen.p, "Edge probability")->required();
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--out", gen.out, "Output graph file")->required();

  VerifyArgs verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "Check proper connectivity of a coloring");
  verify_cmd->add_option("--graph", verify.graph)->required();
  verify_cmd->add_option("--coloring", verify.coloring)->required();
  verify_cmd->add_option("--pairs", verify.pairs,
                         "'all' or u,v[;u,v...]")->capture_default_str();
  verify_cmd->add_flag("--certificates", verify.certificates,
                       "Include a proper path per pair");
  verify_cmd->add_flag("--all-failing", verify.all_failing,
                       "Report every failing pair instead of the first");
  verify_cmd->add_option("--threads", verify.threads)->check(CLI::PositiveNumber);

  SolveArgs solve;
  auto* solve_cmd =
      app.add_subcommand("solve", "Exact proper connection number");
  solve_cmd->add_option("--graph", solve.graph)->required();
  solve_cmd->add_option("--max-colors", solve.max_colors, "0 = no cap");
  solve_cmd->add_flag("--deterministic", solve.deterministic,
                      "Accepted for compatibility; the search is sequential");
  solve_cmd->add_option("--max-edges-two-colors", solve.max_edges_two);
  solve_cmd->add_option("--max-edges-more-colors", solve.max_edges_more);
  solve_cmd->add_option("--witness", solve.witness, "Write the witness coloring");

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand(
      "construct", "Two-coloring construction for random graphs");
  construct_cmd->add_option("--graph", construct.graph);
  construct_cmd->add_option("--n", construct.n);
  construct_cmd->add_option("--p-formula", construct.p_formula,
                            "threshold | hamilton | explicit:P")
      ->capture_default_str();
  construct_cmd->add_option("--offset", construct.offset, "Additive offset a")
      ->capture_default_str();
  construct_cmd->add_option("--seed", construct.seed);
  construct_cmd->add_flag("--paper-constants", construct.paper_constants,
                          "Use tau = ln n / 100 without the desk-scale floor");
  construct_cmd->add_option("--repair-rounds", construct.repair_rounds)
      ->capture_default_str();
  construct_cmd->add_option("--trace", construct.trace, "Write the JSON trace");
  construct_cmd->add_option("--out", construct.out, "Write the coloring");
  construct_cmd->add_option("--graph-out", construct.graph_out,
                            "Write the sampled graph");

  TwoSubgraphArgs two;
  auto* two_cmd = app.add_subcommand(
      "two-subgraphs", "Coloring from two connected spanning subgraphs");
  two_cmd->add_option("--graph", two.graph)->required();
  two_cmd->add_option("--e1", two.e1, "Graph file holding the first subgraph");
  two_cmd->add_option("--e2", two.e2, "Graph file holding the second subgraph");
  two_cmd->add_flag("--find-trees", two.find_trees,
                    "Use two edge-disjoint spanning trees");
  two_cmd->add_option("--root", two.root)->capture_default_str();
  two_cmd->add_option("--out", two.out, "Write the coloring");

  DiagnoseArgs diagnose;
  auto* diagnose_cmd = app.add_subcommand(
      "diagnose", "Structural checks on a sample of G(n, p)");
  diagnose_cmd->add_option("--graph", diagnose.graph)->required();
  diagnose_cmd->add_option("--p", diagnose.p, "Generating edge probability")
      ->required();
  diagnose_cmd->add_option("--seed", diagnose.seed);
  diagnose_cmd->add_option("--beta", diagnose.beta)->capture_default_str();
  diagnose_cmd->add_option("--tau", diagnose.tau, "Explicit degree threshold");

  ExperimentArgs experiment;
  auto* experiment_cmd =
      app.add_subcommand("experiment", "Threshold experiment over offsets");
  experiment_cmd->add_option("--n", experiment.n)->capture_default_str();
  experiment_cmd->add_option("--formula", experiment.formula,
                             "connect | hamilton")
      ->capture_default_str();
  experiment_cmd->add_option("--offsets", experiment.offsets,
                             "Comma-separated offsets a")
      ->delimiter(',');
  experiment_cmd->add_option("--trials", experiment.trials)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  experiment_cmd->add_option("--seed", experiment.seed);
  experiment_cmd->add_option("--threads", experiment.threads)
      ->check(CLI::PositiveNumber);
  experiment_cmd->add_flag("--no-construct", experiment.no_construct,
                           "Record connectivity only");
  experiment_cmd->add_flag("--paper-constants", experiment.paper_constants);
  experiment_cmd->add_option("--out-csv", experiment.out_csv);
  experiment_cmd->add_option("--out-json", experiment.out_json);

  CensusArgs census;
  auto* census_cmd = app.add_subcommand(
      "census", "pc histogram over all connected labeled graphs");
  census_cmd->add_option("--n", census.n)->required();
  census_cmd->add_option("--out", census.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gen_cmd) run_gen(gen);
    if (*verify_cmd) run_verify(verify);
    if (*solve_cmd) run_solve(solve);
    if (*construct_cmd) run_construct(construct);
    if (*two_cmd) run_two_subgraphs(two);
    if (*diagnose_cmd) run_diagnose(diagnose);
    if (*experiment_cmd) run_experiment(experiment);
    if (*census_cmd) run_census(census);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.message << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << json{{"error", pc_status_name(e.status)},
                      {"message", e.message}}
                     .dump()
              << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "Internal"}, {"message", e.what()}}.dump()
              << '\n';
    return 1;
  }
  return 0;
}
