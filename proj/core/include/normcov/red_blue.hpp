#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "normcov/graph.hpp"

namespace normcov {

enum class Color : std::uint8_t { none, blue, red };

/// Partial graph specification: blue pairs are forced edges, red pairs are
/// forced non-edges, every other pair is free.
///
/// Adjacency is stored as sorted per-vertex lists, so families with tens of
/// thousands of vertices stay cheap.
class RedBlueGraph {
 public:
  RedBlueGraph() = default;

  /// Validates ranges, loops, repeats and blue/red overlap (InputError).
  static RedBlueGraph from_edges(std::size_t n, std::span<const Edge> blue, std::span<const Edge> red);

  /// Builds from per-vertex neighbour lists that the caller guarantees are
  /// symmetric, loop-free and colour-disjoint. Lists are sorted here.
  static RedBlueGraph from_adjacency(std::vector<VertexList> blue, std::vector<VertexList> red);

  std::size_t order() const noexcept { return blue_.size(); }

  Color color(Vertex u, Vertex v) const;
  bool is_blue(Vertex u, Vertex v) const { return color(u, v) == Color::blue; }
  bool is_red(Vertex u, Vertex v) const { return color(u, v) == Color::red; }

  std::span<const Vertex> blue_neighbours(Vertex v) const noexcept { return blue_[v]; }
  std::span<const Vertex> red_neighbours(Vertex v) const noexcept { return red_[v]; }

  std::size_t blue_edge_count() const noexcept;
  std::size_t red_edge_count() const noexcept;
  std::vector<Edge> blue_edges() const;
  std::vector<Edge> red_edges() const;

  RedBlueGraph swapped_colors() const;
  /// Induced red-blue graph on sorted `keep`; keep[i] becomes vertex i.
  RedBlueGraph induced(std::span<const Vertex> keep) const;

  bool operator==(const RedBlueGraph& other) const = default;

 private:
  std::vector<VertexList> blue_;
  std::vector<VertexList> red_;
};

/// How free pairs are decided when realizing a red-blue graph.
struct AllAbsent {};
struct AllPresent {};
/// Each free pair (u, v), u < v, visited in lexicographic order, receives
/// exactly one Rng(seed).bernoulli(probability) draw.
struct RandomPairs {
  double probability = 0.5;
  std::uint64_t seed = 0;
};
using FreePairPolicy = std::variant<AllAbsent, AllPresent, RandomPairs>;

/// The graph of type `h` whose free pairs are chosen by `policy`.
Graph realize_type(const RedBlueGraph& h, const FreePairPolicy& policy);

/// True iff g agrees with every coloured pair of h (same vertex set).
bool is_of_type(const Graph& g, const RedBlueGraph& h);

}  // namespace normcov
