#include "normcov/enumerate.hpp"

#include <memory>
#include <string>

#include "normcov/errors.hpp"

namespace normcov {

namespace {

// Backtracking over relabellings, one position at a time. At position j the
// relabelled column j is fixed by perm[0..j]; it is compared with the
// original column j (rows 0..j-1 top down, earlier bits dominate).
class CanonicalTest {
 public:
  explicit CanonicalTest(const Graph& g) : g_(g), n_(g.order()), perm_(n_), used_(n_, false) {}

  bool run() { return !extend(0); }

 private:
  // True when some completion of the current prefix beats the original code.
  bool extend(std::size_t pos) {
    if (pos == n_) return false;
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      perm_[pos] = v;
      const int cmp = compare_column(pos);
      if (cmp > 0) return true;
      if (cmp == 0) {
        used_[v] = true;
        const bool better = extend(pos + 1);
        used_[v] = false;
        if (better) return true;
      }
    }
    return false;
  }

  int compare_column(std::size_t j) const {
    for (std::size_t i = 0; i < j; ++i) {
      const bool mine = g_.adjacent(perm_[i], perm_[j]);
      const bool orig = g_.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j));
      if (mine != orig) return mine ? 1 : -1;
    }
    return 0;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> perm_;
  std::vector<bool> used_;
};

}  // namespace

bool is_canonical(const Graph& g) { return CanonicalTest(g).run(); }

std::vector<Graph> enumerate_graphs(std::size_t n) {
  if (n > kMaxEnumerationOrder) {
    throw PreconditionError("built-in enumeration supports n <= " + std::to_string(kMaxEnumerationOrder) +
                            "; supply a graph6 catalog for larger orders");
  }
  std::vector<Graph> level{Graph(0)};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<Graph> next;
    const auto last = static_cast<Vertex>(m - 1);
    for (const Graph& parent : level) {
      const Graph base = parent.with_extra_vertices(1);
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (m - 1)); ++mask) {
        Graph g = base;
        for (Vertex i = 0; i < last; ++i) {
          // Row 0 is the most significant bit of the new column.
          if (mask >> (last - 1 - i) & 1U) g.add_edge(i, last);
        }
        if (is_canonical(g)) next.push_back(std::move(g));
      }
    }
    level = std::move(next);
  }
  return level;
}

std::function<std::optional<Graph>()> enumeration_source(std::size_t max_n) {
  if (max_n > kMaxEnumerationOrder) {
    throw PreconditionError("built-in enumeration supports n <= " + std::to_string(kMaxEnumerationOrder));
  }
  struct State {
    std::size_t order = 0;
    std::size_t max_n = 0;
    std::vector<Graph> current;
    std::size_t pos = 0;
  };
  auto state = std::make_shared<State>();
  state->max_n = max_n;
  return [state]() -> std::optional<Graph> {
    while (state->pos == state->current.size()) {
      if (state->order == state->max_n) return std::nullopt;
      state->current = enumerate_graphs(++state->order);
      state->pos = 0;
    }
    return state->current[state->pos++];
  };
}

std::function<std::optional<Graph>()> catalog_source(std::vector<Graph> graphs) {
  auto store = std::make_shared<std::vector<Graph>>(std::move(graphs));
  auto pos = std::make_shared<std::size_t>(0);
  return [store, pos]() -> std::optional<Graph> {
    if (*pos == store->size()) return std::nullopt;
    return (*store)[(*pos)++];
  };
}

}  // namespace normcov
