#include "normcov/fuzz.hpp"

#include <algorithm>
#include <numeric>

#include "normcov/errors.hpp"

namespace normcov {

namespace {

struct Rect {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

// Splits `set` into two nonempty parts at random (set.size() >= 2).
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> random_split(Rng& rng,
                                                                           const std::vector<std::size_t>& set) {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  do {
    left.clear();
    right.clear();
    for (const auto x : set) (rng.bernoulli(0.5) ? left : right).push_back(x);
  } while (left.empty() || right.empty());
  return {left, right};
}

}  // namespace

NormalInstance random_normal_instance(Rng& rng, const FuzzOptions& options) {
  if (options.min_n < 1 || options.min_n > options.max_n || options.max_side < 1) {
    throw InputError("random_normal_instance: invalid size options");
  }
  if (options.edge_probability < 0 || options.edge_probability > 1) {
    throw InputError("random_normal_instance: edge probability outside [0, 1]");
  }
  // Grid large enough to host min_n cells.
  std::size_t rows = 1 + static_cast<std::size_t>(rng.below(options.max_side));
  std::size_t cols = 1 + static_cast<std::size_t>(rng.below(options.max_side));
  while (rows * cols < options.min_n) {
    if (rows <= cols) {
      ++rows;
    } else {
      ++cols;
    }
  }
  const std::size_t cap = std::min(options.max_n, rows * cols);
  const std::size_t target = options.min_n + static_cast<std::size_t>(rng.below(cap - options.min_n + 1));

  std::vector<Rect> rects(1);
  rects[0].rows.resize(rows);
  rects[0].cols.resize(cols);
  std::iota(rects[0].rows.begin(), rects[0].rows.end(), std::size_t{0});
  std::iota(rects[0].cols.begin(), rects[0].cols.end(), std::size_t{0});
  while (rects.size() < target) {
    const auto pick = static_cast<std::size_t>(rng.below(rects.size()));
    Rect& r = rects[pick];
    const bool can_rows = r.rows.size() > 1;
    const bool can_cols = r.cols.size() > 1;
    if (!can_rows && !can_cols) continue;
    const bool split_rows = can_rows && (!can_cols || rng.bernoulli(0.5));
    Rect other;
    if (split_rows) {
      auto [a, b] = random_split(rng, r.rows);
      other.rows = std::move(b);
      other.cols = r.cols;
      r.rows = std::move(a);
    } else {
      auto [a, b] = random_split(rng, r.cols);
      other.cols = std::move(b);
      other.rows = r.rows;
      r.cols = std::move(a);
    }
    rects.push_back(std::move(other));
  }

  const std::size_t n = rects.size();
  std::vector<Vertex> relabel(n);
  std::iota(relabel.begin(), relabel.end(), Vertex{0});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(relabel[i - 1], relabel[static_cast<std::size_t>(rng.below(i))]);
  }

  auto shares = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return std::any_of(a.begin(), a.end(), [&](std::size_t x) { return std::find(b.begin(), b.end(), x) != b.end(); });
  };
  NormalInstance out{Graph(n), {}};
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      bool edge;
      if (shares(rects[u].rows, rects[v].rows)) {
        edge = true;
      } else if (shares(rects[u].cols, rects[v].cols)) {
        edge = false;
      } else {
        edge = rng.bernoulli(options.edge_probability);
      }
      if (edge) out.graph.add_edge(relabel[u], relabel[v]);
    }
  }
  out.cover.cliques.resize(rows);
  out.cover.stables.resize(cols);
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto i : rects[v].rows) out.cover.cliques[i].push_back(relabel[v]);
    for (const auto j : rects[v].cols) out.cover.stables[j].push_back(relabel[v]);
  }
  for (auto& k : out.cover.cliques) std::sort(k.begin(), k.end());
  for (auto& st : out.cover.stables) std::sort(st.begin(), st.end());
  return out;
}

}  // namespace normcov
