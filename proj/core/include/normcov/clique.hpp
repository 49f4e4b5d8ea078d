#pragma once

#include <cstddef>
#include <cstdint>

#include "normcov/budget.hpp"
#include "normcov/graph.hpp"

namespace normcov {

struct CliqueOptions {
  SearchBudget budget;
  /// Inputs above this order are refused with PreconditionError.
  std::size_t max_vertices = 2000;
};

/// Result of an exact maximum-clique search.
///
/// When `exact` is false the budget ran out and `size` is the best lower
/// bound found (witnessed by `witness`).
struct CliqueResult {
  std::size_t size = 0;
  bool exact = true;
  VertexList witness;
  std::uint64_t nodes = 0;
};

/// Maximum clique by branch and bound with greedy-colouring upper bounds
/// (bitset colour classes over a degeneracy ordering).
CliqueResult maximum_clique(const Graph& g, const CliqueOptions& options = {});

/// Maximum stable set, as maximum_clique of the complement.
CliqueResult maximum_stable_set(const Graph& g, const CliqueOptions& options = {});

/// omega(g); throws BudgetExhausted if the search does not finish.
std::size_t clique_number(const Graph& g, const CliqueOptions& options = {});
/// alpha(g); throws BudgetExhausted if the search does not finish.
std::size_t independence_number(const Graph& g, const CliqueOptions& options = {});

}  // namespace normcov
