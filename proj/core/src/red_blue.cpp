#include "normcov/red_blue.hpp"

#include <algorithm>
#include <string>

#include "normcov/errors.hpp"
#include "normcov/rng.hpp"

namespace normcov {

namespace {

std::vector<VertexList> lists_from_edges(std::size_t n, std::span<const Edge> edges, const char* what) {
  std::vector<VertexList> adj(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError(std::string(what) + " edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} out of range for n=" + std::to_string(n));
    }
    if (u == v) throw InputError(std::string(what) + " self-loop at vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    if (auto dup = std::adjacent_find(list.begin(), list.end()); dup != list.end()) {
      throw InputError(std::string(what) + " edge {" + std::to_string(v) + "," + std::to_string(*dup) +
                       "} listed twice");
    }
  }
  return adj;
}

std::vector<Edge> edges_of(const std::vector<VertexList>& adj) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < adj.size(); ++u) {
    for (const Vertex v : adj[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool contains(const VertexList& list, Vertex v) { return std::binary_search(list.begin(), list.end(), v); }

}  // namespace

RedBlueGraph RedBlueGraph::from_edges(std::size_t n, std::span<const Edge> blue, std::span<const Edge> red) {
  RedBlueGraph h;
  h.blue_ = lists_from_edges(n, blue, "blue");
  h.red_ = lists_from_edges(n, red, "red");
  for (Vertex v = 0; v < n; ++v) {
    VertexList both;
    std::set_intersection(h.blue_[v].begin(), h.blue_[v].end(), h.red_[v].begin(), h.red_[v].end(),
                          std::back_inserter(both));
    if (!both.empty()) {
      throw InputError("pair {" + std::to_string(v) + "," + std::to_string(both.front()) +
                       "} is both blue and red");
    }
  }
  return h;
}

RedBlueGraph RedBlueGraph::from_adjacency(std::vector<VertexList> blue, std::vector<VertexList> red) {
  if (blue.size() != red.size()) throw InputError("blue/red adjacency size mismatch");
  for (auto* side : {&blue, &red}) {
    for (auto& list : *side) {
      if (!std::is_sorted(list.begin(), list.end())) std::sort(list.begin(), list.end());
    }
  }
  RedBlueGraph h;
  h.blue_ = std::move(blue);
  h.red_ = std::move(red);
  return h;
}

Color RedBlueGraph::color(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) {
    throw InputError("pair {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
  }
  // Search the shorter of the two lists.
  const bool use_u = blue_[u].size() + red_[u].size() <= blue_[v].size() + red_[v].size();
  const Vertex a = use_u ? u : v;
  const Vertex b = use_u ? v : u;
  if (contains(blue_[a], b)) return Color::blue;
  if (contains(red_[a], b)) return Color::red;
  return Color::none;
}

std::size_t RedBlueGraph::blue_edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& list : blue_) twice += list.size();
  return twice / 2;
}

std::size_t RedBlueGraph::red_edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& list : red_) twice += list.size();
  return twice / 2;
}

std::vector<Edge> RedBlueGraph::blue_edges() const { return edges_of(blue_); }
std::vector<Edge> RedBlueGraph::red_edges() const { return edges_of(red_); }

RedBlueGraph RedBlueGraph::swapped_colors() const {
  RedBlueGraph h;
  h.blue_ = red_;
  h.red_ = blue_;
  return h;
}

RedBlueGraph RedBlueGraph::induced(std::span<const Vertex> keep) const {
  constexpr Vertex kDropped = static_cast<Vertex>(-1);
  std::vector<Vertex> index(order(), kDropped);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= order()) throw InputError("vertex " + std::to_string(keep[i]) + " out of range");
    if (i > 0 && keep[i] <= keep[i - 1]) throw InputError("induced(): vertex list must be strictly increasing");
    index[keep[i]] = static_cast<Vertex>(i);
  }
  auto project = [&](const std::vector<VertexList>& adj) {
    std::vector<VertexList> out(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
      for (const Vertex w : adj[keep[i]]) {
        if (index[w] != kDropped) out[i].push_back(index[w]);
      }
    }
    return out;
  };
  RedBlueGraph h;
  h.blue_ = project(blue_);
  h.red_ = project(red_);
  return h;
}

Graph realize_type(const RedBlueGraph& h, const FreePairPolicy& policy) {
  const std::size_t n = h.order();
  Graph g(n);
  if (std::holds_alternative<AllPresent>(policy)) {
    g = Graph::complete(n);
    for (const auto& [u, v] : h.red_edges()) g.remove_edge(u, v);
    return g;
  }
  for (const auto& [u, v] : h.blue_edges()) g.add_edge(u, v);
  if (const auto* random = std::get_if<RandomPairs>(&policy)) {
    if (!(random->probability >= 0.0 && random->probability <= 1.0)) {
      throw InputError("free-pair probability must lie in [0, 1]");
    }
    Rng rng(random->seed);
    Bitset colored(n);
    for (Vertex u = 0; u < n; ++u) {
      colored.reset_all();
      for (const Vertex w : h.blue_neighbours(u)) colored.set(w);
      for (const Vertex w : h.red_neighbours(u)) colored.set(w);
      for (Vertex v = u + 1; v < n; ++v) {
        if (colored.test(v)) continue;
        if (rng.bernoulli(random->probability)) g.add_edge(u, v);
      }
    }
  }
  return g;
}

bool is_of_type(const Graph& g, const RedBlueGraph& h) {
  if (g.order() != h.order()) return false;
  for (const auto& [u, v] : h.blue_edges()) {
    if (!g.adjacent(u, v)) return false;
  }
  for (const auto& [u, v] : h.red_edges()) {
    if (g.adjacent(u, v)) return false;
  }
  return true;
}

}  // namespace normcov
