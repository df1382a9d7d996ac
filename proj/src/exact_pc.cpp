#include "pcolor/exact_pc.hpp"

#include <algorithm>
#include <vector>

#include "pcolor/error.hpp"
#include "pcolor/proper_path.hpp"

namespace pcolor {
namespace {

constexpr std::size_t kChromaticIndexEdgeLimit = 16;

void require_searchable(const Graph& g) {
  if (g.vertex_count() < 2)
    throw Error(ErrorKind::InvalidArgument,
                "proper connection needs at least two vertices");
  if (!is_connected(g))
    throw Error(ErrorKind::GraphDisconnected,
                "proper connection number is defined for connected graphs");
}

void check_budget(const Graph& g, Color k, const SearchBudget& budget) {
  if (k <= 1) return;
  const std::size_t limit = k == 2 ? budget.max_edges_two_colors
                                   : budget.max_edges_more_colors;
  if (g.edge_count() > limit)
    throw Error(ErrorKind::BudgetExceeded,
                "exhaustive " + std::to_string(k) + "-color search allows at most " +
                    std::to_string(limit) + " edges, graph has " +
                    std::to_string(g.edge_count()));
}

/// Odometer over canonical color sequences of length m with colors 1..k.
/// `accept(prefix_length)` may reject a partial assignment.
template <typename Accept, typename Visit>
bool enumerate_canonical(std::size_t m, Color k, std::vector<Color>& colors,
                         Accept&& accept, Visit&& visit) {
  colors.assign(m, 0);
  if (m == 0) return visit(colors);
  // prefix_max[i] = max color among edges < i.
  std::vector<Color> prefix_max(m + 1, 0);
  std::size_t i = 0;
  while (true) {
    const Color limit = std::min<Color>(k, prefix_max[i] + 1);
    if (colors[i] < limit) {
      ++colors[i];
      prefix_max[i + 1] = std::max(prefix_max[i], colors[i]);
      if (!accept(i)) continue;
      if (i + 1 == m) {
        if (visit(colors)) return true;
        continue;
      }
      ++i;
      colors[i] = 0;
    } else {
      colors[i] = 0;
      if (i == 0) return false;
      --i;
    }
  }
}

}  // namespace

std::optional<EdgeColoring> pc_decision(const Graph& g, Color k,
                                        const SearchBudget& budget) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  require_searchable(g);
  check_budget(g, k, budget);

  std::vector<Color> colors;
  std::optional<EdgeColoring> found;
  VerifyOptions verify;
  verify.early_exit = true;
  enumerate_canonical(
      g.edge_count(), k, colors, [](std::size_t) { return true; },
      [&](const std::vector<Color>& assignment) {
        EdgeColoring candidate(assignment, k);
        if (is_properly_connected(g, candidate, verify).properly_connected) {
          found = std::move(candidate);
          return true;
        }
        return false;
      });
  return found;
}

PcResult pc_exact(const Graph& g, const SearchBudget& budget,
                  std::optional<Color> max_colors) {
  require_searchable(g);
  PcResult result;
  const auto m = static_cast<Color>(g.edge_count());
  // pc <= chi' <= Delta + 1 (Vizing), and pc <= m.
  result.upper_bound_used =
      std::min<Color>(m, static_cast<Color>(g.max_degree()) + 1);
  if (g.is_complete()) {
    result.value = 1;
    result.lower_bound_used = 1;
    result.witness = EdgeColoring(g.edge_count(), 1);
    return result;
  }
  result.lower_bound_used = 2;
  for (Color k = result.lower_bound_used; k <= result.upper_bound_used; ++k) {
    if (max_colors && k > *max_colors)
      throw Error(ErrorKind::ColorLimitReached,
                  "no proper-path coloring with at most " +
                      std::to_string(*max_colors) + " colors");
    if (auto witness = pc_decision(g, k, budget)) {
      result.value = k;
      result.witness = std::move(*witness);
      return result;
    }
  }
  // Unreachable for a connected graph: a proper edge coloring with
  // upper_bound_used colors always exists.
  throw Error(ErrorKind::InvalidArgument,
              "search exhausted without a proper-path coloring");
}

Color chromatic_index_small(const Graph& g) {
  if (g.edge_count() > kChromaticIndexEdgeLimit)
    throw Error(ErrorKind::BudgetExceeded,
                "chromatic index search allows at most " +
                    std::to_string(kChromaticIndexEdgeLimit) + " edges");
  if (g.edge_count() == 0) return 0;
  const auto delta = static_cast<Color>(g.max_degree());
  std::vector<Color> colors;
  for (Color k = delta; k <= delta + 1; ++k) {
    // Edge i conflicts with any earlier edge sharing an endpoint.
    auto proper_so_far = [&](std::size_t i) {
      const Edge& e = g.edge(static_cast<EdgeId>(i));
      for (Vertex x : {e.u, e.v}) {
        const auto ids = g.incident_edges(x);
        for (EdgeId other : ids)
          if (other < i && colors[other] == colors[i]) return false;
      }
      return true;
    };
    const bool ok = enumerate_canonical(g.edge_count(), k, colors,
                                        proper_so_far,
                                        [](const std::vector<Color>&) {
                                          return true;
                                        });
    if (ok) return k;
  }
  throw Error(ErrorKind::InvalidArgument, "no proper edge coloring found");
}

}  // namespace pcolor
