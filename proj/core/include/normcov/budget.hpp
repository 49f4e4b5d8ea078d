#pragma once

#include <chrono>
#include <cstdint>
#include <limits>

namespace normcov {

/// Limits for exhaustive searches.
///
/// With `deterministic` set, only the node count is enforced so that an
/// exhausted search stops at the same node on every machine.
struct SearchBudget {
  std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
  double max_seconds = std::numeric_limits<double>::infinity();
  bool deterministic = false;

  static SearchBudget unlimited() { return {}; }
  static SearchBudget nodes(std::uint64_t n) { return {n, std::numeric_limits<double>::infinity(), true}; }

  bool is_unlimited() const noexcept {
    return max_nodes == std::numeric_limits<std::uint64_t>::max() &&
           (deterministic || max_seconds == std::numeric_limits<double>::infinity());
  }
};

/// Counts nodes against a SearchBudget; the clock is sampled every 1024 nodes.
class BudgetMeter {
 public:
  explicit BudgetMeter(const SearchBudget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  /// Charge one node. Returns false once the budget is exhausted.
  bool tick() {
    if (exhausted_) return false;
    if (++nodes_ > budget_.max_nodes) {
      exhausted_ = true;
      return false;
    }
    if (!budget_.deterministic && (nodes_ & 1023U) == 0 &&
        budget_.max_seconds != std::numeric_limits<double>::infinity()) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > budget_.max_seconds) {
        exhausted_ = true;
        return false;
      }
    }
    return true;
  }

  bool exhausted() const noexcept { return exhausted_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace normcov
