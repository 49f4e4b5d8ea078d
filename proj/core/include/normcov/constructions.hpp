#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "normcov/cover.hpp"
#include "normcov/graph.hpp"
#include "normcov/red_blue.hpp"

namespace normcov {

/// A red-blue family member with its standard normal cover and a label per
/// vertex. The cover is (c, s)-normal for the declared c and s.
struct LabeledRB {
  RedBlueGraph rb;
  std::vector<std::string> labels;
  Cover cover;
  std::size_t c = 0;
  std::size_t s = 0;
};

/// A plain graph together with a normal cover.
struct NormalInstance {
  Graph graph;
  Cover cover;
};

// ---------------------------------------------------------------------------
// G_c

inline constexpr std::size_t kMaxGcLevel = 18;

/// |G_c| = 3 * 2^(c-1) - 2.
std::uint64_t gc_order(std::size_t c);

/// The red-blue graph G_c, assembled by the two-copies-plus-two-vertices
/// recursion (iteratively, one block per level).
///
/// Vertex order is the order of that recursion: the new vertices "0" and
/// "1" first, then the copy G_{c-1}(0), then G_{c-1}(1). Labels are binary
/// sequences; the standard cover pairs each length-c sequence v_i with the
/// clique of its prefixes and the red clique of its prefix flips plus v_i.
///
/// Requires 1 <= c <= kMaxGcLevel.
LabeledRB build_gc(std::size_t c);

/// Index in build_gc(c) of a binary-sequence label. Throws InputError for
/// labels that are not vertices of G_c.
Vertex gc_index(std::string_view label, std::size_t c);

/// Colour of the pair {a, b} in G_c computed directly from the labels:
/// with |a| = k <= |b| = l, k < l and a, b agreeing on the first k-1 bits,
/// the pair is blue when a_k = b_k and red otherwise; every other pair is
/// uncoloured.
Color gc_adjacency_oracle(std::string_view a, std::string_view b, std::size_t c);

// ---------------------------------------------------------------------------
// F_c

inline constexpr std::size_t kMaxFcLevel = 14;

/// f_1 = 1, f_2 = 4, f_c = 5 f_{c-2} + 5.
std::uint64_t fc_order(std::size_t c);

/// F_1 = G_1, F_2 = G_2; for c > 2 a coloured pentagon A..E (blue cycle,
/// red diagonals) joined to five copies F_{c-2}(X). Copy X is fully blue
/// to the two pentagon vertices opposite X and fully red to X's two
/// pentagon neighbours. Pentagon vertices are 0..4, copies follow in
/// order A..E; labels are "A".."E" and "X:" + inner label.
///
/// The standard cover extends each copy's cliques by its blue pentagon pair
/// and each copy's stable sets by its red pentagon pair.
///
/// Requires 1 <= c <= kMaxFcLevel.
LabeledRB build_fc(std::size_t c);

// ---------------------------------------------------------------------------
// G_{r,k}

/// r stars K_{1,k} in blue; the leaves of each star form a red clique, each
/// root is red to the leaves of every other star and, for r >= 3, roots are
/// pairwise red. Cover: every blue edge is a clique; each root contributes
/// the stable set of its leaves plus all other roots. (2, k+r-1)-normal.
LabeledRB build_grk(std::size_t r, std::size_t k);

// ---------------------------------------------------------------------------
// Multigraph expansion

/// A graph H with a positive multiplicity on each edge.
struct MultiH {
  Graph h;
  std::map<Edge, std::uint32_t> multiplicity;

  /// Throws InputError unless multiplicities are exactly the edges of h,
  /// all positive, and h has no isolated vertex.
  void validate() const;
  /// Largest multiplicity over the edges at v.
  std::uint32_t lambda(Vertex v) const;
};

/// Result of expanding a MultiH: the vertices of H come first, then for each
/// edge (in lexicographic order) its m(e) private vertices.
struct Expansion {
  NormalInstance instance;
  std::vector<Edge> edges;
  std::vector<VertexList> privates;  // privates[i] belongs to edges[i]
};

/// Expands `mh` into a graph where each copy of an edge uv gets a private
/// vertex adjacent to exactly u and v; the cliques are these triangles.
/// The stable side is found by the exact stable-side search.
///
/// Throws InfeasibleError when deg_H(v) + lambda(v) - 1 > s for some v, or
/// when no stable side with sets of size <= s exists.
NormalInstance expand_multih(const MultiH& mh, std::size_t s);

/// The clique side of the expansion only (no stable sets).
Expansion expand_structure(const MultiH& mh);

/// Recovers H and its multiplicities from a triangle cover by deleting the
/// highest-indexed private vertex of each clique.
MultiH multih_from_cover(const Graph& g, const Cover& cover);

/// d = ceil(s / 3); s - 2d + 2 disjoint stars K_{1,d}, every edge with
/// multiplicity d. The stable side is explicit: the set of all roots, and
/// for each star A and leaf j the d privates of (root_A, j), the other d - 1
/// leaves of A and the roots of the other stars. (3, s)-normal.
NormalInstance build_star_expansion(std::size_t s);

MultiH star_multih(std::size_t s);

/// (s - 2d + 2)(d^2 + d + 1) with d = ceil(s / 3).
std::uint64_t star_expansion_order(std::size_t s);

// ---------------------------------------------------------------------------
// Vertex removal and augmentation

/// Number of (two sibling leaves, parent) triples still removable.
std::size_t remaining_triples(const LabeledRB& gc);

/// Removes `t` triples from a G_c (or an earlier result of this function).
///
/// For the prefix x of length c-2 (in increasing order) a triple is
/// {x00, x10, x1}: two length-c leaves and the height-(c-1) parent ending in
/// 1. The surviving parent w = x0 replaces the two leaves' cover elements
/// with the clique of its prefixes and the stable set of its prefix flips
/// plus w. Removing every triple of G_c yields G_{c-1}.
LabeledRB remove_triples(const LabeledRB& gc, std::size_t t);

/// Adds two vertices adjacent to all old vertices but not to each other.
/// The cover gains the new vertex C in every clique, an extra clique
/// K + {D} for the first listed clique K, and the stable set {C, D}.
///
/// Throws PreconditionError if `cover` is not a normal cover of g.
NormalInstance add_universal_pair(const Graph& g, const Cover& cover);

}  // namespace normcov
