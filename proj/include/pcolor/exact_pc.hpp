#pragma once

#include <cstddef>
#include <optional>

#include "pcolor/graph.hpp"

namespace pcolor {

/// Largest edge counts for which exhaustive search is attempted.
struct SearchBudget {
  std::size_t max_edges_two_colors = 16;
  std::size_t max_edges_more_colors = 12;
};

struct PcResult {
  Color value = 0;
  /// Verified proper-path coloring with palette_size() == value.
  EdgeColoring witness;
  Color lower_bound_used = 1;
  Color upper_bound_used = 1;
};

/// A k-coloring under which every pair of vertices has a proper path, or
/// nullopt if none exists. Colorings are enumerated in canonical order (the
/// color of edge i is at most one more than the largest color on edges < i),
/// which visits one representative per color permutation; the first one that
/// verifies is returned.
/// Throws GraphDisconnected, BudgetExceeded, InvalidArgument (n < 2, k = 0).
std::optional<EdgeColoring> pc_decision(const Graph& g, Color k,
                                        const SearchBudget& budget = {});

/// Proper connection number by trying k = 1, 2, ... The only closed form used
/// is pc = 1 for complete graphs. `max_colors` caps the search
/// (ColorLimitReached when exceeded).
PcResult pc_exact(const Graph& g, const SearchBudget& budget = {},
                  std::optional<Color> max_colors = std::nullopt);

/// Chromatic index by backtracking over canonical proper edge colorings,
/// trying Delta then Delta + 1 colors. Requires m <= 16. Returns 0 for an
/// edgeless graph.
Color chromatic_index_small(const Graph& g);

}  // namespace pcolor
