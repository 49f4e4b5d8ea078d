#include "normcov/clique.hpp"

#include <algorithm>
#include <string>

#include "normcov/errors.hpp"

namespace normcov {

namespace {

/// Vertices ordered so that position 0 is the last vertex removed by
/// repeated minimum-degree deletion (the densest core comes first).
std::vector<Vertex> degeneracy_order(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  Bitset alive(n, true);
  std::vector<Vertex> removal;
  removal.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = 0;
    std::size_t best = static_cast<std::size_t>(-1);
    alive.for_each([&](std::size_t v) {
      if (degree[v] < best) {
        best = degree[v];
        pick = static_cast<Vertex>(v);
      }
    });
    alive.reset(pick);
    (g.neighbours(pick) & alive).for_each([&](std::size_t w) { --degree[w]; });
    removal.push_back(pick);
  }
  std::reverse(removal.begin(), removal.end());
  return removal;
}

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, const SearchBudget& budget) : meter_(budget) {
    const std::size_t n = g.order();
    order_ = degeneracy_order(g);
    std::vector<Vertex> position(n);
    for (std::size_t i = 0; i < n; ++i) position[order_[i]] = static_cast<Vertex>(i);
    adj_.assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) {
      g.neighbours(order_[i]).for_each([&](std::size_t w) { adj_[i].set(position[w]); });
    }
  }

  CliqueResult run() {
    const std::size_t n = adj_.size();
    CliqueResult result;
    if (n == 0) return result;
    seed_incumbent();
    Bitset all(n, true);
    expand(all);
    result.size = best_.size();
    result.exact = !aborted_;
    result.nodes = meter_.nodes();
    for (const Vertex v : best_) result.witness.push_back(order_[v]);
    std::sort(result.witness.begin(), result.witness.end());
    return result;
  }

 private:
  // Greedy clique through the ordering gives a starting lower bound.
  void seed_incumbent() {
    Bitset candidates(adj_.size(), true);
    for (std::size_t v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v + 1)) {
      best_.push_back(static_cast<Vertex>(v));
      candidates &= adj_[v];
    }
  }

  void expand(Bitset& candidates) {
    if (!meter_.tick()) {
      aborted_ = true;
      return;
    }
    std::vector<Vertex> order;
    std::vector<std::size_t> colour;
    colour_sort(candidates, order, colour);

    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + colour[i] <= best_.size()) return;
      const Vertex v = order[i];
      current_.push_back(v);
      Bitset next = candidates & adj_[v];
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next);
        if (aborted_) return;
      }
      current_.pop_back();
      candidates.reset(v);
    }
  }

  // Colour classes are maximal independent sets taken in bit order. Vertices
  // whose colour cannot beat the incumbent are left out of `order`.
  void colour_sort(const Bitset& candidates, std::vector<Vertex>& order, std::vector<std::size_t>& colour) const {
    const std::size_t needed = best_.size() + 1 > current_.size() ? best_.size() + 1 - current_.size() : 1;
    Bitset uncoloured = candidates;
    std::size_t k = 0;
    while (uncoloured.any()) {
      ++k;
      Bitset cls = uncoloured;
      for (std::size_t v = cls.find_first(); v != Bitset::npos; v = cls.find_next(v + 1)) {
        uncoloured.reset(v);
        cls.subtract(adj_[v]);
        if (k >= needed) {
          order.push_back(static_cast<Vertex>(v));
          colour.push_back(k);
        }
      }
    }
  }

  BudgetMeter meter_;
  std::vector<Vertex> order_;
  std::vector<Bitset> adj_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
  bool aborted_ = false;
};

}  // namespace

CliqueResult maximum_clique(const Graph& g, const CliqueOptions& options) {
  if (g.order() > options.max_vertices) {
    throw PreconditionError("exact clique search limited to " + std::to_string(options.max_vertices) +
                            " vertices (got " + std::to_string(g.order()) + ")");
  }
  return CliqueSearch(g, options.budget).run();
}

CliqueResult maximum_stable_set(const Graph& g, const CliqueOptions& options) {
  return maximum_clique(complement(g), options);
}

std::size_t clique_number(const Graph& g, const CliqueOptions& options) {
  const auto result = maximum_clique(g, options);
  if (!result.exact) {
    throw BudgetExhausted("clique search budget exhausted; best lower bound " + std::to_string(result.size));
  }
  return result.size;
}

std::size_t independence_number(const Graph& g, const CliqueOptions& options) {
  const auto result = maximum_stable_set(g, options);
  if (!result.exact) {
    throw BudgetExhausted("stable-set search budget exhausted; best lower bound " + std::to_string(result.size));
  }
  return result.size;
}

}  // namespace normcov
