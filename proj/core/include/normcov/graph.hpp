#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "normcov/bitset.hpp"

namespace normcov {

using Vertex = std::uint32_t;
using VertexList = std::vector<Vertex>;

/// Unordered vertex pair, stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) noexcept { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Undirected simple graph on 0..n-1 with one adjacency bitset per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Throws InputError on loops, out-of-range endpoints or repeated edges.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph path(std::size_t n);

  std::size_t order() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }

  bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[u].test(v); }
  const Bitset& neighbours(Vertex v) const noexcept { return rows_[v]; }
  std::size_t degree(Vertex v) const noexcept { return rows_[v].count(); }
  std::size_t edge_count() const noexcept;
  /// Edges in (u, v) lexicographic order with u < v.
  std::vector<Edge> edges() const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  /// The graph with vertex `x` deleted; vertices above x shift down by one.
  Graph without_vertex(Vertex x) const;
  /// Induced subgraph on `keep` (sorted); vertex keep[i] becomes i.
  Graph induced(std::span<const Vertex> keep) const;
  /// Vertex perm[i] of the result corresponds to vertex i of this graph.
  Graph relabelled(std::span<const Vertex> perm) const;
  /// Adds `count` isolated vertices at the end.
  Graph with_extra_vertices(std::size_t count) const;
  Graph complemented() const;

  bool operator==(const Graph& other) const = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<Bitset> rows_;
};

/// True iff every pair of distinct listed vertices is adjacent.
bool is_clique(const Graph& g, std::span<const Vertex> vertices);
/// True iff no pair of listed vertices is adjacent.
bool is_stable(const Graph& g, std::span<const Vertex> vertices);

Graph complement(const Graph& g);

}  // namespace normcov
