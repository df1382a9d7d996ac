#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pcolor/graph.hpp"

namespace pcolor {

struct PosaOptions {
  /// Rotation/extension steps allowed per attempt; 0 picks 40 * |set| + 1000.
  std::uint64_t steps_per_attempt = 0;
  /// Independent restarts, each from a fresh random start vertex.
  unsigned attempts = 8;
};

/// Hamiltonian cycle of the subgraph induced by `restrict_to`, found by
/// longest-path extension with Posa rotations and seeded restarts.
///
/// The returned cyclic sequence starts at its smallest vertex and continues
/// toward the smaller of that vertex's two cycle neighbors. nullopt means the
/// budget ran out or the induced subgraph is provably non-Hamiltonian (a
/// vertex of induced degree < 2, or disconnected). Requires |restrict_to| >= 3.
std::optional<std::vector<Vertex>> posa_hamiltonian_cycle(
    const Graph& g, const std::vector<Vertex>& restrict_to, std::uint64_t seed,
    const PosaOptions& options = {});

/// Rotates/reflects a cycle into the canonical form described above.
std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle);

}  // namespace pcolor
