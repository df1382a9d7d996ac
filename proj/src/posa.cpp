#include "pcolor/posa.hpp"

#include <algorithm>

#include "pcolor/error.hpp"
#include "pcolor/rng.hpp"

namespace pcolor {
namespace {

/// Induced subgraph relabelled to 0..N-1.
struct LocalGraph {
  std::vector<Vertex> to_global;
  std::vector<std::vector<std::uint32_t>> adj;

  bool adjacent(std::uint32_t a, std::uint32_t b) const {
    const auto& list = adj[a];
    return std::binary_search(list.begin(), list.end(), b);
  }
};

LocalGraph induce(const Graph& g, std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  LocalGraph local;
  local.to_global = vertices;
  local.adj.resize(vertices.size());
  std::vector<std::int64_t> to_local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.vertex_count())
      throw Error(ErrorKind::VertexOutOfRange, "vertex outside the graph");
    to_local[vertices[i]] = static_cast<std::int64_t>(i);
  }
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : g.neighbors(vertices[i]))
      if (to_local[w] >= 0)
        local.adj[i].push_back(static_cast<std::uint32_t>(to_local[w]));
  return local;
}

bool plausibly_hamiltonian(const LocalGraph& local) {
  const std::size_t n = local.adj.size();
  for (const auto& list : local.adj)
    if (list.size() < 2) return false;
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto w : local.adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

class RotationSearch {
 public:
  RotationSearch(const LocalGraph& local, SplitMix64& rng)
      : g_(local), rng_(rng), n_(local.adj.size()) {}

  std::optional<std::vector<std::uint32_t>> run(std::uint32_t start,
                                                std::uint64_t budget) {
    path_.clear();
    pos_.assign(n_, kOff);
    free_degree_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v)
      free_degree_[v] = static_cast<std::uint32_t>(g_.adj[v].size());
    append(start);

    for (std::uint64_t step = 0; step < budget; ++step) {
      const std::uint32_t end = path_.back();
      if (auto next = pick_extension(end)) {
        append(*next);
        continue;
      }
      const bool closes = g_.adjacent(end, path_.front());
      if (path_.size() == n_) {
        if (closes) return path_;
      } else if (closes && extend_through_cycle()) {
        continue;
      }
      rotate_once(end);
    }
    return std::nullopt;
  }

 private:
  static constexpr std::uint32_t kOff = 0xFFFFFFFFu;

  void append(std::uint32_t v) {
    pos_[v] = static_cast<std::uint32_t>(path_.size());
    path_.push_back(v);
    for (auto w : g_.adj[v]) --free_degree_[w];
  }

  // Unvisited neighbor with the fewest unvisited neighbors of its own, so
  // that vertices about to become dead ends are absorbed first.
  std::optional<std::uint32_t> pick_extension(std::uint32_t end) {
    std::optional<std::uint32_t> best;
    std::uint32_t best_free = 0;
    std::uint64_t ties = 0;
    for (auto w : g_.adj[end]) {
      if (pos_[w] != kOff) continue;
      if (!best || free_degree_[w] < best_free) {
        best = w;
        best_free = free_degree_[w];
        ties = 1;
      } else if (free_degree_[w] == best_free && rng_.below(++ties) == 0) {
        best = w;
      }
    }
    return best;
  }

  // The path's vertex set carries a cycle (end ~ front). Reopen it next to a
  // path vertex that still has an unvisited neighbor.
  bool extend_through_cycle() {
    const std::size_t len = path_.size();
    const std::size_t offset = rng_.below(len);
    for (std::size_t k = 0; k < len; ++k) {
      const std::size_t i = (offset + k) % len;
      if (free_degree_[path_[i]] == 0) continue;
      std::rotate(path_.begin(), path_.begin() + static_cast<long>(i) + 1,
                  path_.end());
      for (std::size_t j = 0; j < len; ++j)
        pos_[path_[j]] = static_cast<std::uint32_t>(j);
      return true;
    }
    return false;
  }

  // Posa rotation: for an on-path neighbor w of the endpoint, reverse the
  // segment after w, making w's successor the new endpoint. Prefer rotations
  // whose new endpoint can extend (or close a full path); otherwise pick at
  // random, occasionally flipping the whole path to work from the other end.
  void rotate_once(std::uint32_t end) {
    const std::size_t len = path_.size();
    const bool full = len == n_;
    std::optional<std::uint32_t> chosen;
    std::uint64_t good = 0, any = 0;
    std::optional<std::uint32_t> fallback;
    for (auto w : g_.adj[end]) {
      const std::uint32_t p = pos_[w];
      if (p == kOff || p + 2 > len - 1) continue;  // skip predecessor
      const std::uint32_t candidate = path_[p + 1];
      const bool useful = full ? g_.adjacent(candidate, path_.front())
                               : free_degree_[candidate] > 0;
      if (useful && rng_.below(++good) == 0) chosen = w;
      if (rng_.below(++any) == 0) fallback = w;
    }
    if (!chosen) {
      if (!fallback || rng_.below(8) == 0) {
        std::reverse(path_.begin(), path_.end());
        for (std::size_t j = 0; j < len; ++j)
          pos_[path_[j]] = static_cast<std::uint32_t>(j);
        return;
      }
      chosen = fallback;
    }
    const std::size_t from = pos_[*chosen] + 1;
    std::reverse(path_.begin() + static_cast<long>(from), path_.end());
    for (std::size_t j = from; j < len; ++j)
      pos_[path_[j]] = static_cast<std::uint32_t>(j);
  }

  const LocalGraph& g_;
  SplitMix64& rng_;
  std::size_t n_;
  std::vector<std::uint32_t> path_;
  std::vector<std::uint32_t> pos_;
  std::vector<std::uint32_t> free_degree_;
};

}  // namespace

std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle) {
  if (cycle.size() < 3) return cycle;
  const auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());
  if (cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

std::optional<std::vector<Vertex>> posa_hamiltonian_cycle(
    const Graph& g, const std::vector<Vertex>& restrict_to, std::uint64_t seed,
    const PosaOptions& options) {
  const LocalGraph local = induce(g, restrict_to);
  const std::size_t n = local.adj.size();
  if (n < 3)
    throw Error(ErrorKind::InvalidArgument,
                "a Hamiltonian cycle needs at least 3 vertices");
  if (!plausibly_hamiltonian(local)) return std::nullopt;

  const std::uint64_t budget = options.steps_per_attempt != 0
                                   ? options.steps_per_attempt
                                   : 40 * static_cast<std::uint64_t>(n) + 1000;
  SplitMix64 rng(seed);
  RotationSearch search(local, rng);
  for (unsigned attempt = 0; attempt < std::max(1u, options.attempts);
       ++attempt) {
    std::uint32_t start;
    if (attempt == 0) {
      // Starting at a minimum-degree vertex pins its forced edges early.
      start = 0;
      for (std::uint32_t v = 1; v < n; ++v)
        if (local.adj[v].size() < local.adj[start].size()) start = v;
    } else {
      start = static_cast<std::uint32_t>(rng.below(n));
    }
    if (auto cycle = search.run(start, budget)) {
      std::vector<Vertex> out;
      out.reserve(n);
      for (auto v : *cycle) out.push_back(local.to_global[v]);
      return canonical_cycle(std::move(out));
    }
  }
  return std::nullopt;
}

}  // namespace pcolor
