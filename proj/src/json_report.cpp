#include "json_report.hpp"

#include <cmath>

namespace pcolor::report {

json edge_json(Edge e) { return json::array({e.u, e.v}); }

namespace {

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back(edge_json(e));
  return out;
}

}  // namespace

json connectivity_json(const ConnectivityReport& r, Color palette) {
  json out{{"properly_connected", r.properly_connected},
           {"palette", palette},
           {"pairs_checked", r.pair_count_checked},
           {"failing_pairs", edges_json(r.failing_pairs)}};
  if (!r.certificates.empty()) {
    json certs = json::array();
    for (const auto& [pair, path] : r.certificates)
      certs.push_back({{"pair", edge_json(pair)}, {"path", path}});
    out["certificates"] = std::move(certs);
  }
  return out;
}

json pc_json(const PcResult& r) {
  return {{"pc", r.value},
          {"lower_bound", r.lower_bound_used},
          {"upper_bound", r.upper_bound_used},
          {"witness_palette", r.witness.palette_size()}};
}

json trace_json(const ConstructionTrace& t) {
  const auto& cls = t.classification;
  const auto& m = t.matching;
  json pairs = json::array();
  for (const auto& p : m.pairs) pairs.push_back({p.large, p.small});
  json trees = json::array();
  for (const auto& tree : t.trees)
    trees.push_back(
        {{"root", tree.root}, {"levels", tree.levels}, {"parents", tree.parents}});
  json missing = json::array();
  for (const auto& [i, j] : t.missing_links) missing.push_back({i, j});

  return {
      {"outcome", t.outcome()},
      {"stage_reached", stage_name(t.stage_reached)},
      {"failed_at", t.failed_at ? json(stage_name(*t.failed_at)) : json()},
      {"failure_reason", t.failure_reason},
      {"regime", t.paper_constants ? "paper" : "adaptive"},
      {"classification",
       {{"beta", cls.beta},
        {"tau", cls.tau},
        {"small", cls.small},
        {"large_count", cls.large.size()}}},
      {"matching",
       {{"pairs", std::move(pairs)},
        {"parity_edge", m.parity_edge ? edge_json(*m.parity_edge) : json()},
        {"excluded", m.excluded ? json(*m.excluded) : json()},
        {"v1_size", m.v1.size()}}},
      {"hamiltonian_cycle", t.hamiltonian_cycle},
      {"tree_params",
       {{"arity", t.tree_params.arity},
        {"depth", t.tree_params.depth},
        {"epsilon", t.tree_params.epsilon}}},
      {"trees", std::move(trees)},
      {"leaf_link_edges", edges_json(t.leaf_link_edges)},
      {"missing_links", std::move(missing)},
      {"repair_log", t.repair_log},
      {"verified", t.succeeded()},
  };
}

json diagnostics_json(const DiagnosticReport& r, const VertexClassification& cls,
                      std::size_t n, double p) {
  json clauses = json::array();
  for (const auto& c : r.clauses)
    clauses.push_back({{"name", c.name},
                       {"passed", c.passed},
                       {"applicable", c.applicable},
                       {"checked", c.checked},
                       {"violations", c.violations},
                       {"observed", c.observed},
                       {"bound", c.bound}});
  return {{"n", n},
          {"p", p},
          {"beta", cls.beta},
          {"tau", cls.tau},
          {"small", cls.small},
          {"all_passed", r.all_passed()},
          {"clauses", std::move(clauses)}};
}

json census_json(const CensusResult& r) {
  json histogram = json::object();
  for (const auto& [pc, count] : r.histogram)
    histogram[std::to_string(pc)] = count;
  const auto two = r.histogram.count(2) ? r.histogram.at(2) : 0;
  return {{"n", r.n},
          {"labeled_graphs", r.labeled_graphs},
          {"connected_graphs", r.connected_graphs},
          {"histogram", std::move(histogram)},
          {"pc2_fraction", r.connected_graphs == 0
                               ? 0.0
                               : static_cast<double>(two) /
                                     static_cast<double>(r.connected_graphs)}};
}

json experiment_json(const TrialReport& r) {
  const auto& c = r.config;
  json offsets = json::array();
  for (const auto& s : r.summaries) {
    json entry{{"a", s.a},
               {"p", s.p},
               {"trials", s.trials},
               {"connected", s.connected},
               {"connected_fraction", s.connected_fraction()},
               {"ham_found", s.ham_found},
               {"pc_le_2", s.pc_le_2},
               {"success_fraction", s.success_fraction()},
               {"stages", s.stages}};
    if (c.formula == PFormula::Connect)
      entry["connected_limit"] = std::exp(-std::exp(-s.a));
    offsets.push_back(std::move(entry));
  }
  return {{"n", c.n},
          {"formula", c.formula == PFormula::Connect ? "connect" : "hamilton"},
          {"seed", c.seed},
          {"trials", c.trials},
          {"construct", c.construct},
          {"regime", c.construction.paper_constants ? "paper" : "adaptive"},
          {"offsets", std::move(offsets)}};
}

}  // namespace pcolor::report
