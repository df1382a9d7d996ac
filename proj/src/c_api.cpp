#include "pcolor/pcolor.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "json_report.hpp"
#include "pcolor/diagnostics.hpp"
#include "pcolor/error.hpp"
#include "pcolor/exact_pc.hpp"
#include "pcolor/experiment.hpp"
#include "pcolor/graph_io.hpp"
#include "pcolor/proper_path.hpp"
#include "pcolor/subgraph_coloring.hpp"
#include "pcolor/two_coloring.hpp"

struct pc_graph {
  pcolor::Graph g;
};

struct pc_coloring {
  pcolor::EdgeColoring c;
};

namespace {

using pcolor::Error;
using pcolor::ErrorKind;

thread_local std::string last_error;

pc_status status_of(ErrorKind kind) {
  return static_cast<pc_status>(static_cast<int>(kind) + 1);
}

template <typename F>
pc_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return PC_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PC_ERR_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PC_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return PC_ERR_INTERNAL;
  }
}

void require(bool condition, const char* what) {
  if (!condition) throw Error(ErrorKind::InvalidArgument, what);
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const nlohmann::json& j) {
  if (out) *out = duplicate(j.dump());
}

std::vector<pcolor::Edge> edge_list(const uint32_t* endpoints, size_t count) {
  require(endpoints != nullptr || count == 0, "null edge array");
  std::vector<pcolor::Edge> edges;
  edges.reserve(count);
  for (size_t i = 0; i < count; ++i)
    edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
  return edges;
}

void require_match(const pc_graph* g, const pc_coloring* c) {
  require(g != nullptr && c != nullptr, "null graph or coloring");
  require(c->c.size() == g->g.edge_count(),
          "coloring does not belong to this graph");
}

pcolor::ConstructionParams construction_params(const pc_construct_options& o) {
  pcolor::ConstructionParams params;
  params.paper_constants = o.paper_constants != 0;
  params.beta = o.beta;
  params.min_tau = o.min_tau;
  params.epsilon = o.epsilon;
  if (o.arity != 0) params.arity = o.arity;
  if (o.depth != 0) params.depth = o.depth;
  params.repair_rounds = o.repair_rounds;
  return params;
}

}  // namespace

extern "C" {

const char* pc_status_name(pc_status status) {
  switch (status) {
    case PC_OK: return "Ok";
    case PC_ERR_OUT_OF_MEMORY: return "OutOfMemory";
    case PC_ERR_INTERNAL: return "Internal";
    default: break;
  }
  const int k = static_cast<int>(status) - 1;
  if (k < 0 || k > static_cast<int>(ErrorKind::NotSpanning)) return "Unknown";
  return pcolor::error_kind_name(static_cast<ErrorKind>(k)).data();
}

const char* pc_last_error(void) { return last_error.c_str(); }

const char* pc_version(void) { return "0.1.0"; }

void pc_string_free(char* s) { std::free(s); }

uint64_t pc_derive_seed(uint64_t master, uint64_t index) {
  return pcolor::derive_seed(master, index);
}

pc_status pc_graph_from_edges(size_t n, const uint32_t* endpoints,
                              size_t edge_count, pc_graph** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const auto edges = edge_list(endpoints, edge_count);
    *out = new pc_graph{pcolor::Graph::from_edges(n, edges)};
  });
}

pc_status pc_graph_sample(size_t n, double p, uint64_t seed, pc_graph** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    require(p >= 0.0 && p <= 1.0, "p must lie in [0, 1]");
    *out = new pc_graph{pcolor::gnp_sample({n, p, seed})};
  });
}

pc_status pc_graph_parse(const char* text, pc_graph** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new pc_graph{pcolor::read_graph(text)};
  });
}

pc_status pc_graph_load(const char* path, pc_graph** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = new pc_graph{pcolor::read_graph(pcolor::read_text_file(path))};
  });
}

pc_status pc_graph_format(const pc_graph* g, char** text) {
  return guarded([&] {
    require(g != nullptr && text != nullptr, "null argument");
    *text = duplicate(pcolor::write_graph(g->g));
  });
}

pc_status pc_graph_save(const pc_graph* g, const char* path) {
  return guarded([&] {
    require(g != nullptr && path != nullptr, "null argument");
    pcolor::write_text_file_atomic(path, pcolor::write_graph(g->g));
  });
}

void pc_graph_free(pc_graph* g) { delete g; }

size_t pc_graph_vertex_count(const pc_graph* g) {
  return g ? g->g.vertex_count() : 0;
}

size_t pc_graph_edge_count(const pc_graph* g) {
  return g ? g->g.edge_count() : 0;
}

pc_status pc_graph_edges(const pc_graph* g, uint32_t* endpoints) {
  return guarded([&] {
    require(g != nullptr && (endpoints != nullptr || g->g.edge_count() == 0),
            "null argument");
    size_t i = 0;
    for (const auto& e : g->g.edges()) {
      endpoints[i++] = e.u;
      endpoints[i++] = e.v;
    }
  });
}

int pc_graph_is_connected(const pc_graph* g) {
  return g && pcolor::is_connected(g->g) ? 1 : 0;
}

int pc_graph_is_2_connected(const pc_graph* g) {
  return g && pcolor::is_2_connected(g->g) ? 1 : 0;
}

int64_t pc_graph_diameter(const pc_graph* g) {
  if (!g) return -1;
  const auto d = pcolor::diameter(g->g);
  return d == pcolor::kInfiniteDistance ? -1 : static_cast<int64_t>(d);
}

pc_status pc_coloring_from_colors(const pc_graph* g, const uint32_t* colors,
                                  uint32_t palette, pc_coloring** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    const size_t m = g->g.edge_count();
    require(colors != nullptr || m == 0, "null color array");
    std::vector<pcolor::Color> values(colors, colors + m);
    *out = new pc_coloring{pcolor::EdgeColoring(std::move(values), palette)};
  });
}

pc_status pc_coloring_parse(const pc_graph* g, const char* text,
                            pc_coloring** out) {
  return guarded([&] {
    require(g != nullptr && text != nullptr && out != nullptr, "null argument");
    *out = new pc_coloring{pcolor::read_coloring(g->g, text)};
  });
}

pc_status pc_coloring_load(const pc_graph* g, const char* path,
                           pc_coloring** out) {
  return guarded([&] {
    require(g != nullptr && path != nullptr && out != nullptr, "null argument");
    *out = new pc_coloring{
        pcolor::read_coloring(g->g, pcolor::read_text_file(path))};
  });
}

pc_status pc_coloring_format(const pc_graph* g, const pc_coloring* c,
                             char** text) {
  return guarded([&] {
    require_match(g, c);
    require(text != nullptr, "null output");
    *text = duplicate(pcolor::write_coloring(g->g, c->c));
  });
}

pc_status pc_coloring_save(const pc_graph* g, const pc_coloring* c,
                           const char* path) {
  return guarded([&] {
    require_match(g, c);
    require(path != nullptr, "null path");
    pcolor::write_text_file_atomic(path, pcolor::write_coloring(g->g, c->c));
  });
}

void pc_coloring_free(pc_coloring* c) { delete c; }

uint32_t pc_coloring_palette(const pc_coloring* c) {
  return c ? c->c.palette_size() : 0;
}

size_t pc_coloring_size(const pc_coloring* c) { return c ? c->c.size() : 0; }

uint32_t pc_coloring_color(const pc_coloring* c, size_t edge) {
  return c && edge < c->c.size() ? c->c[static_cast<pcolor::EdgeId>(edge)] : 0;
}

void pc_verify_options_default(pc_verify_options* options) {
  if (!options) return;
  *options = pc_verify_options{1, 0, 1, nullptr, 0};
}

pc_status pc_verify(const pc_graph* g, const pc_coloring* c,
                    const pc_verify_options* options, char** json) {
  return guarded([&] {
    require_match(g, c);
    pc_verify_options o;
    pc_verify_options_default(&o);
    if (options) o = *options;
    pcolor::ConnectivityReport report;
    if (o.pairs) {
      const auto pairs = edge_list(o.pairs, o.pair_count);
      for (const auto& p : pairs)
        if (p.v >= g->g.vertex_count())
          throw Error(ErrorKind::VertexOutOfRange,
                      "pair vertex " + std::to_string(p.v) + " out of range");
      report = pcolor::check_pairs(g->g, c->c, pairs, o.certificates != 0);
    } else {
      pcolor::VerifyOptions vo;
      vo.early_exit = o.early_exit != 0;
      vo.certificates = o.certificates != 0;
      vo.threads = o.threads == 0 ? 1 : o.threads;
      report = pcolor::is_properly_connected(g->g, c->c, vo);
    }
    emit(json, pcolor::report::connectivity_json(report, c->c.palette_size()));
  });
}

pc_status pc_proper_path(const pc_graph* g, const pc_coloring* c, uint32_t u,
                         uint32_t v, uint32_t* path, size_t* length) {
  return guarded([&] {
    require_match(g, c);
    require(path != nullptr && length != nullptr, "null output");
    const size_t n = g->g.vertex_count();
    if (u >= n || v >= n)
      throw Error(ErrorKind::VertexOutOfRange, "vertex out of range");
    *length = 0;
    const auto found = pcolor::proper_path_exists(g->g, c->c, u, v);
    if (!found) return;
    std::copy(found->begin(), found->end(), path);
    *length = found->size();
  });
}

void pc_solve_options_default(pc_solve_options* options) {
  if (!options) return;
  const pcolor::SearchBudget budget;
  *options = pc_solve_options{0, budget.max_edges_two_colors,
                              budget.max_edges_more_colors};
}

pc_status pc_solve(const pc_graph* g, const pc_solve_options* options,
                   pc_coloring** witness, char** json) {
  return guarded([&] {
    require(g != nullptr, "null graph");
    pc_solve_options o;
    pc_solve_options_default(&o);
    if (options) o = *options;
    pcolor::SearchBudget budget{o.max_edges_two_colors,
                                o.max_edges_more_colors};
    std::optional<pcolor::Color> cap;
    if (o.max_colors != 0) cap = o.max_colors;
    auto result = pcolor::pc_exact(g->g, budget, cap);
    emit(json, pcolor::report::pc_json(result));
    if (witness) *witness = new pc_coloring{std::move(result.witness)};
  });
}

pc_status pc_chromatic_index(const pc_graph* g, uint32_t* out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = pcolor::chromatic_index_small(g->g);
  });
}

void pc_construct_options_default(pc_construct_options* options) {
  if (!options) return;
  const pcolor::ConstructionParams d;
  *options = pc_construct_options{d.paper_constants ? 1 : 0, d.beta, d.min_tau,
                                  d.epsilon, 0, 0, d.repair_rounds};
}

pc_status pc_construct(const pc_graph* g, const pc_construct_options* options,
                       uint64_t seed, pc_coloring** coloring,
                       char** trace_json) {
  return guarded([&] {
    require(g != nullptr, "null graph");
    pc_construct_options o;
    pc_construct_options_default(&o);
    if (options) o = *options;
    auto result =
        pcolor::construct_two_coloring(g->g, construction_params(o), seed);
    emit(trace_json, pcolor::report::trace_json(result.trace));
    if (coloring)
      *coloring = result.coloring
                      ? new pc_coloring{std::move(*result.coloring)}
                      : nullptr;
  });
}

pc_status pc_diagnose(const pc_graph* g, double p, double beta, double tau,
                      uint64_t seed, char** json) {
  return guarded([&] {
    require(g != nullptr, "null graph");
    require(p >= 0.0 && p <= 1.0, "p must lie in [0, 1]");
    const auto cls = tau > 0 ? pcolor::classify_by_threshold(g->g, tau)
                             : pcolor::classify_vertices(g->g, beta);
    const auto report = pcolor::lemma_diagnostics(g->g, cls, p, seed);
    emit(json, pcolor::report::diagnostics_json(report, cls,
                                                g->g.vertex_count(), p));
  });
}

pc_status pc_two_subgraphs(const pc_graph* g, const uint32_t* e1,
                           size_t e1_count, const uint32_t* e2,
                           size_t e2_count, uint32_t root,
                           pc_coloring** coloring, char** json) {
  return guarded([&] {
    require(g != nullptr, "null graph");
    auto result = pcolor::color_via_two_subgraphs(
        g->g, edge_list(e1, e1_count), edge_list(e2, e2_count), root);
    const bool verified =
        pcolor::is_properly_connected(g->g, result.coloring).properly_connected;
    emit(json, {{"t", result.shared},
                {"palette", result.coloring.palette_size()},
                {"verified", verified},
                {"root", root}});
    if (coloring) *coloring = new pc_coloring{std::move(result.coloring)};
  });
}

pc_status pc_spanning_tree_pair(const pc_graph* g, pc_graph** first,
                                pc_graph** second) {
  return guarded([&] {
    require(g != nullptr && first != nullptr && second != nullptr,
            "null argument");
    *first = *second = nullptr;
    auto trees = pcolor::find_two_edge_disjoint_spanning_trees(g->g);
    if (!trees) return;
    auto a = std::make_unique<pc_graph>(
        pc_graph{g->g.spanning_subgraph(trees->first)});
    auto b = std::make_unique<pc_graph>(
        pc_graph{g->g.spanning_subgraph(trees->second)});
    *first = a.release();
    *second = b.release();
  });
}

pc_status pc_experiment(const pc_experiment_options* options, char** csv,
                        char** json) {
  return guarded([&] {
    require(options != nullptr, "null options");
    require(options->offsets != nullptr || options->offset_count == 0,
            "null offsets");
    pcolor::ExperimentConfig config;
    config.n = options->n;
    config.formula = options->formula == PC_FORMULA_HAMILTON
                         ? pcolor::PFormula::Hamilton
                         : pcolor::PFormula::Connect;
    config.offsets.assign(options->offsets,
                          options->offsets + options->offset_count);
    config.trials = options->trials;
    config.seed = options->seed;
    config.threads = options->threads == 0 ? 1 : options->threads;
    config.construct = options->construct != 0;
    config.construction.paper_constants = options->paper_constants != 0;
    const auto report = pcolor::run_threshold_experiment(config);
    std::string csv_text = pcolor::trial_csv(report);
    std::string json_text = pcolor::report::experiment_json(report).dump();
    char* csv_out = csv ? duplicate(csv_text) : nullptr;
    if (json) {
      try {
        *json = duplicate(json_text);
      } catch (...) {
        std::free(csv_out);
        throw;
      }
    }
    if (csv) *csv = csv_out;
  });
}

pc_status pc_census(size_t n, char** json) {
  return guarded([&] {
    emit(json, pcolor::report::census_json(pcolor::census_small_graphs(n)));
  });
}

}  // extern "C"
