#pragma once

#include <cstddef>

#include "normcov/constructions.hpp"
#include "normcov/rng.hpp"

namespace normcov {

struct FuzzOptions {
  std::size_t min_n = 1;
  std::size_t max_n = 12;
  /// Largest number of cliques (rows) and stable sets (columns).
  std::size_t max_side = 6;
  /// Probability that a pair not forced by the cover is an edge.
  double edge_probability = 0.5;
};

/// A random graph with a normal cover.
///
/// A rows x cols grid (rows = cliques, columns = stable sets) is cut into
/// rectangles A_v x B_v by repeatedly splitting a random rectangle along a
/// random nonempty proper subset of its rows or of its columns. Each
/// rectangle is a vertex lying in cliques A_v and stable sets B_v, so every
/// clique meets every stable set in exactly one vertex. Vertices sharing a
/// row are joined, vertices sharing a column are not, and all other pairs
/// are decided by edge_probability. Vertices are shuffled at the end.
NormalInstance random_normal_instance(Rng& rng, const FuzzOptions& options = {});

}  // namespace normcov
