#pragma once

#include <optional>

#include "normcov/graph.hpp"
#include "normcov/red_blue.hpp"

namespace normcov {

/// A bijection phi with g of type h under relabelling: every blue pair
/// {u, v} of h maps to an edge {phi(u), phi(v)} of g and every red pair to a
/// non-edge. Returns phi (indexed by h's vertices) or nullopt.
std::optional<VertexList> find_type_embedding(const Graph& g, const RedBlueGraph& h);

/// A bijection phi preserving the colour of every pair, or nullopt.
std::optional<VertexList> rb_isomorphism(const RedBlueGraph& a, const RedBlueGraph& b);

inline bool rb_isomorphic(const RedBlueGraph& a, const RedBlueGraph& b) { return rb_isomorphism(a, b).has_value(); }

/// True iff phi is a colour-preserving bijection from a onto b.
bool is_rb_isomorphism(const RedBlueGraph& a, const RedBlueGraph& b, const VertexList& phi);

}  // namespace normcov
