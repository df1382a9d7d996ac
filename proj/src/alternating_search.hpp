#pragma once

#include <cstdint>
#include <vector>

namespace pcolor::detail {

/// Undirected graph in CSR form used by the matching search.
struct MatchingGraph {
  std::vector<std::uint32_t> offsets;
  std::vector<std::int32_t> adjacency;

  static MatchingGraph from_edge_list(
      std::size_t node_count,
      const std::vector<std::pair<std::int32_t, std::int32_t>>& edges);

  std::size_t node_count() const { return offsets.size() - 1; }
};

/// Edmonds' blossom search for one augmenting path starting at the exposed
/// node `root`. On success the matching in `mate` is augmented in place.
/// Blossom bases are tracked with a union-find structure instead of a
/// per-contraction rescan of all nodes.
class AugmentingPathSearch {
 public:
  explicit AugmentingPathSearch(const MatchingGraph& graph);

  bool augment(std::vector<std::int32_t>& mate, std::int32_t root);

 private:
  std::int32_t base(std::int32_t x);
  std::int32_t find(std::int32_t x);
  void unite_into(std::int32_t x, std::int32_t b);
  std::int32_t lowest_common_base(std::int32_t a, std::int32_t b,
                                  const std::vector<std::int32_t>& mate);
  void mark_path(std::int32_t v, std::int32_t b, std::int32_t child,
                 const std::vector<std::int32_t>& mate);
  void contract(std::int32_t b);

  const MatchingGraph& graph_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> set_parent_;
  std::vector<std::int32_t> set_base_;
  std::vector<std::uint8_t> used_;
  std::vector<std::uint32_t> lca_mark_;
  std::uint32_t lca_stamp_ = 0;
  std::vector<std::int32_t> queue_;
  std::vector<std::int32_t> pending_;
};

}  // namespace pcolor::detail
