#include "normcov/isomorphism.hpp"

#include <algorithm>

namespace normcov {

namespace {

// Vertices of `a` in an order where each one (after the first of its
// component) has a coloured pair to an earlier one, so partial maps are
// checked early.
VertexList search_order(const RedBlueGraph& a) {
  const std::size_t n = a.order();
  VertexList order;
  std::vector<bool> placed(n, false);
  std::vector<std::size_t> links(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = 0;
    bool have = false;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      const auto degree = a.blue_neighbours(v).size() + a.red_neighbours(v).size();
      const auto pick_degree = a.blue_neighbours(pick).size() + a.red_neighbours(pick).size();
      if (!have || links[v] > links[pick] || (links[v] == links[pick] && degree > pick_degree)) {
        pick = v;
        have = true;
      }
    }
    placed[pick] = true;
    order.push_back(pick);
    for (const Vertex w : a.blue_neighbours(pick)) ++links[w];
    for (const Vertex w : a.red_neighbours(pick)) ++links[w];
  }
  return order;
}

// Generic backtracking: `compatible(u, x)` filters single assignments and
// `consistent(u, x, w, y)` checks a pair against an earlier assignment w->y.
template <typename Compatible, typename Consistent>
std::optional<VertexList> match(std::size_t n, const VertexList& order, Compatible&& compatible,
                                Consistent&& consistent) {
  VertexList phi(n, 0);
  std::vector<bool> used(n, false);
  auto step = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == n) return true;
    const Vertex u = order[pos];
    for (Vertex x = 0; x < n; ++x) {
      if (used[x] || !compatible(u, x)) continue;
      bool ok = true;
      for (std::size_t q = 0; q < pos && ok; ++q) ok = consistent(u, x, order[q], phi[order[q]]);
      if (!ok) continue;
      phi[u] = x;
      used[x] = true;
      if (self(self, pos + 1)) return true;
      used[x] = false;
    }
    return false;
  };
  if (!step(step, 0)) return std::nullopt;
  return phi;
}

}  // namespace

std::optional<VertexList> find_type_embedding(const Graph& g, const RedBlueGraph& h) {
  const std::size_t n = h.order();
  if (g.order() != n) return std::nullopt;
  return match(
      n, search_order(h),
      [&](Vertex u, Vertex x) {
        return h.blue_neighbours(u).size() <= g.degree(x) && h.red_neighbours(u).size() + g.degree(x) + 1 <= n;
      },
      [&](Vertex u, Vertex x, Vertex w, Vertex y) {
        switch (h.color(u, w)) {
          case Color::blue:
            return g.adjacent(x, y);
          case Color::red:
            return !g.adjacent(x, y);
          case Color::none:
            return true;
        }
        return true;
      });
}

std::optional<VertexList> rb_isomorphism(const RedBlueGraph& a, const RedBlueGraph& b) {
  const std::size_t n = a.order();
  if (b.order() != n || a.blue_edge_count() != b.blue_edge_count() || a.red_edge_count() != b.red_edge_count()) {
    return std::nullopt;
  }
  return match(
      n, search_order(a),
      [&](Vertex u, Vertex x) {
        return a.blue_neighbours(u).size() == b.blue_neighbours(x).size() &&
               a.red_neighbours(u).size() == b.red_neighbours(x).size();
      },
      [&](Vertex u, Vertex x, Vertex w, Vertex y) { return a.color(u, w) == b.color(x, y); });
}

bool is_rb_isomorphism(const RedBlueGraph& a, const RedBlueGraph& b, const VertexList& phi) {
  const std::size_t n = a.order();
  if (b.order() != n || phi.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (const Vertex x : phi) {
    if (x >= n || hit[x]) return false;
    hit[x] = true;
  }
  if (a.blue_edge_count() != b.blue_edge_count() || a.red_edge_count() != b.red_edge_count()) return false;
  for (const auto& [u, v] : a.blue_edges()) {
    if (!b.is_blue(phi[u], phi[v])) return false;
  }
  for (const auto& [u, v] : a.red_edges()) {
    if (!b.is_red(phi[u], phi[v])) return false;
  }
  return true;
}

}  // namespace normcov
