#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcolor/graph.hpp"
#include "pcolor/two_coloring.hpp"

namespace pcolor {

/// Constants of the structural checks on G(n, p); defaults are the
/// asymptotic values.
struct DiagnosticConstants {
  double small_count_exponent = 0.1;      // |small| <= n^x
  double small_edges_exponent = 0.2;      // edges at small vertices <= n^x
  double density_size_divisor = 375;      // |S| <= n / x
  double density_edge_divisor = 250;      // |E(G[S])| < |S| n p / x
  std::size_t density_samples = 200;
  std::size_t cross_samples = 50;         // |U| = |W| = ceil(n / ln ln n)
  double expansion_size_divisor = 1500;   // |U| <= n / x
  double expansion_factor = 2;            // |N(U, V1)| >= x |U|
  std::size_t expansion_samples = 200;
};

struct ClauseResult {
  std::string name;
  bool passed = true;
  /// False when the clause could not be sampled at this n (vacuous pass).
  bool applicable = true;
  std::size_t checked = 0;
  std::size_t violations = 0;
  /// Observed quantity and its bound for the counting clauses; for sampled
  /// clauses the worst observed ratio against the bound.
  double observed = 0;
  double bound = 0;
};

struct DiagnosticReport {
  std::vector<ClauseResult> clauses;

  bool all_passed() const;
};

/// Checks, in this order: small_count, small_distance (no two small
/// vertices adjacent or sharing a neighbor), density, cross_edges,
/// expansion, small_incident_edges. Sampled clauses draw uniform random
/// vertex sets; clause k uses stream derive_seed(seed, k). V1 is taken to be
/// the large vertices. Never throws on violations.
DiagnosticReport lemma_diagnostics(const Graph& g,
                                   const VertexClassification& cls, double p,
                                   std::uint64_t seed,
                                   const DiagnosticConstants& constants = {});

}  // namespace pcolor
