#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "normcov/budget.hpp"
#include "normcov/constructions.hpp"
#include "normcov/cover.hpp"
#include "normcov/graph.hpp"
#include "normcov/red_blue.hpp"

namespace normcov {

enum class SearchStatus { found, none_exists, budget_exhausted };

std::string to_string(SearchStatus status);

/// Without a finite budget, find_cover refuses graphs above this order.
inline constexpr std::size_t kCompleteCoverSearchLimit = 16;

struct CoverSearchResult {
  SearchStatus status = SearchStatus::none_exists;
  std::optional<Cover> cover;  // set iff status == found
  std::uint64_t nodes = 0;
};

/// Decides whether g has a (c, s)-normal cover.
///
/// Candidates are the cliques with at most c vertices that cannot be grown
/// within that bound (size c, or inclusion-maximal), likewise for stable
/// sets; any cover can be saturated this way without breaking a condition.
/// The search repeatedly picks the uncovered (vertex, side) with the fewest
/// candidates still compatible with every chosen element of the other side.
///
/// Throws PreconditionError when n > kCompleteCoverSearchLimit and the
/// budget is unlimited.
CoverSearchResult find_cover(const Graph& g, std::size_t c, std::size_t s,
                             const SearchBudget& budget = SearchBudget::unlimited());

struct StableSideResult {
  SearchStatus status = SearchStatus::none_exists;
  std::vector<VertexList> stables;
  std::uint64_t nodes = 0;
};

/// Completes a fixed clique side: finds stable sets of size <= s that cover
/// V and each meet every clique. Exists iff every vertex lies in such a
/// stable transversal, so vertices are handled one at a time.
StableSideResult complete_stable_side(const Graph& g, const std::vector<VertexList>& cliques, std::size_t s,
                                      const SearchBudget& budget = SearchBudget::unlimited());

// ---------------------------------------------------------------------------
// Largest (c, s)-normal graph in a stream

/// Produces the next graph, or nullopt at the end of the stream.
using GraphSource = std::function<std::optional<Graph>()>;

struct NSmallResult {
  std::size_t n_max = 0;
  std::optional<NormalInstance> witness;  // first witness of order n_max in stream order
  std::size_t graphs_seen = 0;
  std::size_t graphs_tested = 0;
  bool complete = true;  // false if some relevant search ran out of budget
};

/// Maximum order among stream members admitting a (c, s)-normal cover.
/// Graphs no larger than the current best are skipped.
NSmallResult compute_n_small(std::size_t c, std::size_t s, const GraphSource& graphs,
                             const SearchBudget& per_graph = SearchBudget::unlimited());

/// Same over the built-in isomorphism-free enumeration of orders 1..max_n
/// (max_n <= 8).
NSmallResult compute_n_small(std::size_t c, std::size_t s, std::size_t max_n);

// ---------------------------------------------------------------------------
// Red-free transversals of the red cliques

struct TransversalViolation {
  VertexList set;
  std::size_t overlap = 0;  // largest intersection with a blue clique of the cover

  bool operator==(const TransversalViolation& other) const = default;
};

inline constexpr std::size_t kMaxStoredViolations = 1000;

struct OptimalnoReport {
  std::size_t c = 0;
  std::uint64_t sets_examined = 0;  // transversals found
  std::uint64_t nodes = 0;
  std::uint64_t violation_count = 0;
  std::vector<TransversalViolation> violations;  // the first kMaxStoredViolations, in enumeration order
  bool complete = true;

  bool confirmed() const noexcept { return complete && violation_count == 0; }
};

/// Enumerates every vertex set of size at most c that spans no red pair and
/// meets every stable set of the cover. Each must have exactly c vertices
/// and share at least c - 1 with some clique of the cover; the others are
/// reported as violations.
OptimalnoReport check_transversal_property(const RedBlueGraph& h, const Cover& cover, std::size_t c,
                                           const SearchBudget& budget = SearchBudget::unlimited());

/// check_transversal_property on F_c with its standard cover. For c > 5 a
/// finite budget is required (PreconditionError otherwise).
OptimalnoReport check_optimalno(std::size_t c, const SearchBudget& budget = SearchBudget::unlimited());

struct TransversalCheck {
  bool red_free = false;
  bool hits_every_stable = false;
  std::size_t size = 0;
  std::size_t overlap = 0;

  /// The set satisfies the hypothesis but not the conclusion.
  bool is_counterexample(std::size_t c) const noexcept {
    return red_free && hits_every_stable && size <= c && (size != c || overlap + 1 < c);
  }
};

/// Evaluates one set against the hypothesis and conclusion above.
TransversalCheck check_transversal(const RedBlueGraph& h, const Cover& cover, const VertexList& set);

// ---------------------------------------------------------------------------
// Randomized experiments on G_c

struct AlphaOmegaOptions {
  double probability = 0.5;
  /// Deterministic node budget per exact search; exhausted trials report
  /// lower bounds and are marked incomplete.
  std::uint64_t node_budget = 2'000'000;
};

struct AlphaOmegaTrial {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t omega = 0;
  std::size_t alpha = 0;
  bool omega_exact = true;
  bool alpha_exact = true;

  bool complete() const noexcept { return omega_exact && alpha_exact; }
};

struct AlphaOmegaReport {
  std::size_t c = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  AlphaOmegaOptions options;
  std::vector<AlphaOmegaTrial> trials;
  std::size_t max_omega = 0;
  std::size_t max_alpha = 0;
  std::size_t complete_trials = 0;
  double fraction_below_4c = 0;  // complete trials with omega < 4c and alpha < 4c, over all trials
};

/// Realizes G_c with independent free pairs per trial (seed
/// derive_seed(seed, trial)) and measures omega and alpha.
/// Requires 1 <= c <= 12 and trials >= 1.
AlphaOmegaReport sample_alpha_omega(std::size_t c, std::size_t trials, std::uint64_t seed,
                                    const AlphaOmegaOptions& options = {});

struct MnozicaReport {
  std::size_t c = 0;
  std::size_t n = 0;
  std::size_t subset_size = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t total_pairs = 0;
  std::uint64_t min_non_blue = 0;
  std::uint64_t min_non_red = 0;
  double mean_non_blue = 0;
  double mean_non_red = 0;
  double reference = 0;  // 4.1 c^2; informational only
};

inline constexpr std::uint64_t kMnozicaChunk = 1024;

/// Samples uniform 4c-subsets of G_c and counts the pairs inside that are
/// not blue (resp. not red). Sample i belongs to chunk i / kMnozicaChunk,
/// whose generator is seeded with derive_seed(seed, chunk).
/// Throws PreconditionError when 4c > |G_c|.
MnozicaReport mnozica_estimate(std::size_t c, std::uint64_t samples, std::uint64_t seed);

}  // namespace normcov
