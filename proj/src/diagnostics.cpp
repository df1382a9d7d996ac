#include "pcolor/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "pcolor/rng.hpp"

namespace pcolor {
namespace {

/// Uniform k-subsets of a fixed pool by partial Fisher-Yates.
class SubsetSampler {
 public:
  SubsetSampler(std::vector<Vertex> pool, std::uint64_t seed)
      : pool_(std::move(pool)), rng_(seed) {}

  std::size_t pool_size() const { return pool_.size(); }
  SplitMix64& rng() { return rng_; }

  std::vector<Vertex> draw(std::size_t k) {
    for (std::size_t i = 0; i < k; ++i)
      std::swap(pool_[i], pool_[i + rng_.below(pool_.size() - i)]);
    return {pool_.begin(), pool_.begin() + static_cast<long>(k)};
  }

 private:
  std::vector<Vertex> pool_;
  SplitMix64 rng_;
};

std::vector<Vertex> all_vertices(std::size_t n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), Vertex{0});
  return v;
}

ClauseResult counting_clause(std::string name, double observed, double bound) {
  ClauseResult r;
  r.name = std::move(name);
  r.checked = 1;
  r.observed = observed;
  r.bound = bound;
  r.passed = observed <= bound;
  r.violations = r.passed ? 0 : 1;
  return r;
}

ClauseResult small_distance(const Graph& g, const VertexClassification& cls) {
  ClauseResult r;
  r.name = "small_distance";
  std::vector<bool> small(g.vertex_count(), false);
  for (Vertex y : cls.small) small[y] = true;
  std::vector<std::size_t> small_neighbors(g.vertex_count(), 0);
  for (Vertex y : cls.small)
    for (Vertex w : g.neighbors(y)) {
      if (small[w] && y < w) ++r.violations;
      ++small_neighbors[w];
    }
  for (std::size_t c : small_neighbors)
    if (c >= 2) r.violations += c * (c - 1) / 2;
  const std::size_t s = cls.small.size();
  r.checked = s < 2 ? 0 : s * (s - 1) / 2;
  r.passed = r.violations == 0;
  return r;
}

ClauseResult density(const Graph& g, double p, std::uint64_t seed,
                     const DiagnosticConstants& k) {
  ClauseResult r;
  r.name = "density";
  const std::size_t n = g.vertex_count();
  const auto max_size = static_cast<std::size_t>(
      std::floor(static_cast<double>(n) / k.density_size_divisor));
  if (max_size < 1) {
    r.applicable = false;
    return r;
  }
  SubsetSampler sampler(all_vertices(n), seed);
  std::vector<bool> in_s(n, false);
  for (std::size_t i = 0; i < k.density_samples; ++i) {
    const std::size_t size = 1 + sampler.rng().below(max_size);
    const auto s = sampler.draw(size);
    for (Vertex v : s) in_s[v] = true;
    std::size_t twice_edges = 0;
    for (Vertex v : s)
      for (Vertex w : g.neighbors(v)) twice_edges += in_s[w];
    for (Vertex v : s) in_s[v] = false;
    const double edges = static_cast<double>(twice_edges / 2);
    const double bound = static_cast<double>(size) * static_cast<double>(n) *
                         p / k.density_edge_divisor;
    ++r.checked;
    if (edges >= bound) ++r.violations;
    if (edges > 0) r.observed = std::max(r.observed, edges / bound);
  }
  r.bound = 1.0;
  r.passed = r.violations == 0;
  return r;
}

ClauseResult cross_edges(const Graph& g, std::uint64_t seed,
                         const DiagnosticConstants& k) {
  ClauseResult r;
  r.name = "cross_edges";
  const std::size_t n = g.vertex_count();
  if (n < 16) {
    r.applicable = false;
    return r;
  }
  const double lnln = std::log(std::log(static_cast<double>(n)));
  const auto size =
      static_cast<std::size_t>(std::ceil(static_cast<double>(n) / lnln));
  if (2 * size > n) {
    r.applicable = false;
    return r;
  }
  SubsetSampler sampler(all_vertices(n), seed);
  std::vector<bool> in_u(n, false);
  for (std::size_t i = 0; i < k.cross_samples; ++i) {
    const auto both = sampler.draw(2 * size);
    for (std::size_t j = 0; j < size; ++j) in_u[both[j]] = true;
    bool joined = false;
    for (std::size_t j = size; j < 2 * size && !joined; ++j)
      for (Vertex w : g.neighbors(both[j]))
        if (in_u[w]) {
          joined = true;
          break;
        }
    for (std::size_t j = 0; j < size; ++j) in_u[both[j]] = false;
    ++r.checked;
    if (!joined) ++r.violations;
  }
  r.passed = r.violations == 0;
  return r;
}

ClauseResult expansion(const Graph& g, const VertexClassification& cls,
                       std::uint64_t seed, const DiagnosticConstants& k) {
  ClauseResult r;
  r.name = "expansion";
  const std::size_t n = g.vertex_count();
  const auto max_size = std::min(
      cls.large.size(), static_cast<std::size_t>(std::floor(
                            static_cast<double>(n) / k.expansion_size_divisor)));
  if (max_size < 1) {
    r.applicable = false;
    return r;
  }
  std::vector<bool> in_v1(n, false), in_u(n, false), counted(n, false);
  for (Vertex v : cls.large) in_v1[v] = true;
  SubsetSampler sampler(cls.large, seed);
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < k.expansion_samples; ++i) {
    const std::size_t size = 1 + sampler.rng().below(max_size);
    const auto u = sampler.draw(size);
    for (Vertex v : u) in_u[v] = true;
    std::vector<Vertex> boundary;
    for (Vertex v : u)
      for (Vertex w : g.neighbors(v))
        if (in_v1[w] && !in_u[w] && !counted[w]) {
          counted[w] = true;
          boundary.push_back(w);
        }
    for (Vertex v : u) in_u[v] = false;
    for (Vertex w : boundary) counted[w] = false;
    const double ratio =
        static_cast<double>(boundary.size()) / static_cast<double>(size);
    worst = std::min(worst, ratio);
    ++r.checked;
    if (ratio < k.expansion_factor) ++r.violations;
  }
  r.observed = worst;
  r.bound = k.expansion_factor;
  r.passed = r.violations == 0;
  return r;
}

}  // namespace

bool DiagnosticReport::all_passed() const {
  return std::all_of(clauses.begin(), clauses.end(),
                     [](const ClauseResult& c) { return c.passed; });
}

DiagnosticReport lemma_diagnostics(const Graph& g,
                                   const VertexClassification& cls, double p,
                                   std::uint64_t seed,
                                   const DiagnosticConstants& constants) {
  const double n = static_cast<double>(g.vertex_count());
  DiagnosticReport report;
  report.clauses.push_back(
      counting_clause("small_count", static_cast<double>(cls.small.size()),
                      std::pow(n, constants.small_count_exponent)));
  report.clauses.push_back(small_distance(g, cls));
  report.clauses.push_back(density(g, p, derive_seed(seed, 2), constants));
  report.clauses.push_back(cross_edges(g, derive_seed(seed, 3), constants));
  report.clauses.push_back(expansion(g, cls, derive_seed(seed, 4), constants));

  std::vector<bool> small(g.vertex_count(), false);
  for (Vertex y : cls.small) small[y] = true;
  std::size_t incident = 0;
  for (const Edge& e : g.edges()) incident += small[e.u] || small[e.v];
  report.clauses.push_back(
      counting_clause("small_incident_edges", static_cast<double>(incident),
                      std::pow(n, constants.small_edges_exponent)));
  return report;
}

}  // namespace pcolor
