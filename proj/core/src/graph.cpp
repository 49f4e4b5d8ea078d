#include "normcov/graph.hpp"

#include <string>

#include "normcov/errors.hpp"

namespace normcov {

Graph::Graph(std::size_t n) : rows_(n, Bitset(n)) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range for n=" +
                       std::to_string(n));
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (g.adjacent(u, v)) {
      throw InputError("repeated edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    g.add_edge(u, v);
  }
  return g;
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 0; v < n; ++v) {
    g.rows_[v].set_all();
    g.rows_[v].reset(v);
  }
  return g;
}

Graph Graph::cycle(std::size_t n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(0, static_cast<Vertex>(n - 1));
  return g;
}

Graph Graph::path(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 1; v < n; ++v) g.add_edge(static_cast<Vertex>(v - 1), static_cast<Vertex>(v));
  return g;
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& row : rows_) twice += row.count();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < rows_.size(); ++u) {
    for (std::size_t v = rows_[u].find_next(u + 1); v != Bitset::npos; v = rows_[u].find_next(v + 1)) {
      out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return out;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= order()) {
    throw InputError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(order()));
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  rows_[u].set(v);
  rows_[v].set(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u].reset(v);
  rows_[v].reset(u);
}

Graph Graph::without_vertex(Vertex x) const {
  check_vertex(x);
  VertexList keep;
  keep.reserve(order() - 1);
  for (Vertex v = 0; v < order(); ++v) {
    if (v != x) keep.push_back(v);
  }
  return induced(keep);
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  Graph out(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check_vertex(keep[i]);
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (adjacent(keep[i], keep[j])) {
        out.rows_[i].set(j);
        out.rows_[j].set(i);
      }
    }
  }
  return out;
}

Graph Graph::relabelled(std::span<const Vertex> perm) const {
  if (perm.size() != order()) throw InputError("permutation size mismatch");
  Graph out(order());
  for (const auto& [u, v] : edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

Graph Graph::with_extra_vertices(std::size_t count) const {
  Graph out(order() + count);
  for (const auto& [u, v] : edges()) {
    out.rows_[u].set(v);
    out.rows_[v].set(u);
  }
  return out;
}

bool is_clique(const Graph& g, std::span<const Vertex> vertices) {
  for (const Vertex v : vertices) {
    if (v >= g.order()) throw InputError("vertex " + std::to_string(v) + " out of range");
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] != vertices[j] && !g.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

bool is_stable(const Graph& g, std::span<const Vertex> vertices) {
  for (const Vertex v : vertices) {
    if (v >= g.order()) throw InputError("vertex " + std::to_string(v) + " out of range");
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

Graph Graph::complemented() const {
  Graph out = *this;
  for (std::size_t v = 0; v < out.rows_.size(); ++v) {
    out.rows_[v].flip_all();
    out.rows_[v].reset(v);
  }
  return out;
}

Graph complement(const Graph& g) { return g.complemented(); }

}  // namespace normcov
