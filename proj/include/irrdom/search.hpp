#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "irrdom/domination.hpp"
#include "irrdom/graph.hpp"

namespace irrdom {

struct SearchOptions {
  // Inclusive upper bound on labels; defaults to the diameter and is clamped to it,
  // since larger labels dominate nothing.
  std::optional<Label> label_universe;
  // Wall-clock cap; unset means unbounded.
  std::optional<std::chrono::milliseconds> time_budget;
  // Return the lexicographically smallest solution (by sorted (vertex, label) pairs).
  bool deterministic = true;
  unsigned parallel_width = 1;
  // Forbid double coverage. Defaults to on for vertex-transitive family graphs,
  // where every extended labeling is an exact cover.
  std::optional<bool> require_exact_cover;
  // enumerate_all refuses inputs whose raw assignment count exceeds this.
  double enumeration_cap = 1e9;
};

enum class SearchStatus { found, absent, inconclusive };

std::string_view to_string(SearchStatus status);

struct SearchResult {
  SearchStatus status = SearchStatus::inconclusive;
  std::optional<Labeling> labeling;
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
};

// Looks for an extended labeling with exactly k labeled vertices. `absent`
// always means the search space was exhausted; a hit budget yields
// `inconclusive`. If the budget expires after a solution was found but before
// smaller subtrees were exhausted, the solution is returned as `found` without
// the lexicographic-minimum guarantee.
// Throws DisconnectedGraphError, or ParameterError when k is 0 or exceeds n.
SearchResult find_eids(std::shared_ptr<const Graph> g, std::size_t k, const SearchOptions& opts = {});
SearchResult find_eids(const Graph& g, std::size_t k, const SearchOptions& opts = {});

struct GammaResult {
  // found: gamma holds the minimum; absent: no k admits a labeling;
  // inconclusive: budget hit, last_exhausted_k is the largest k fully ruled out.
  SearchStatus status = SearchStatus::inconclusive;
  std::optional<std::size_t> gamma;
  std::optional<std::size_t> last_exhausted_k;
  std::optional<Labeling> witness;
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
};

// Scans k upward from lower_bound(g); the budget in opts covers the whole scan.
GammaResult gamma_e(std::shared_ptr<const Graph> g, const SearchOptions& opts = {});
GammaResult gamma_e(const Graph& g, const SearchOptions& opts = {});

// Every valid k-labeling, in increasing lexicographic order. No symmetry
// breaking; exact-cover pruning only when opts.require_exact_cover is
// explicitly true. Throws CapExceededError when C(n,k) * P(U+1,k) exceeds
// opts.enumeration_cap.
std::vector<Labeling> enumerate_all(std::shared_ptr<const Graph> g, std::size_t k,
                                    const SearchOptions& opts = {});
std::vector<Labeling> enumerate_all(const Graph& g, std::size_t k, const SearchOptions& opts = {});

// C(n,k) * P(universe+1, k), as a double.
double raw_assignment_count(std::size_t n, std::size_t k, Label universe);

}  // namespace irrdom
