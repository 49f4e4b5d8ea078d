#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "normcov/graph.hpp"

namespace normcov {

inline constexpr std::size_t kMaxEnumerationOrder = 8;

/// True iff g's code is the largest over all relabellings. The code lists
/// the upper triangle column by column (column j holds rows 0..j-1 top
/// down), most significant bit first.
bool is_canonical(const Graph& g);

/// One canonical representative of every isomorphism class on n vertices
/// (n <= kMaxEnumerationOrder), by orderly generation: canonical graphs
/// on n - 1 vertices are extended by every possible last column and
/// extensions that are not canonical are discarded.
std::vector<Graph> enumerate_graphs(std::size_t n);

/// Streams the classes of orders 1..max_n in increasing order.
std::function<std::optional<Graph>()> enumeration_source(std::size_t max_n);

/// Streams the given graphs in order (e.g. a parsed graph6 catalog).
std::function<std::optional<Graph>()> catalog_source(std::vector<Graph> graphs);

}  // namespace normcov
