#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "normcov/cover.hpp"
#include "normcov/graph.hpp"

namespace normcov {

enum class ElementKind { clique, stable };

std::string to_string(ElementKind kind);

/// For each vertex, the indices of the cover cliques and stable sets that
/// contain it.
struct PrivacyIndex {
  std::vector<std::vector<std::size_t>> cliques_of;
  std::vector<std::vector<std::size_t>> stables_of;

  bool private_to_clique(Vertex v) const { return cliques_of[v].size() == 1; }
  bool private_to_stable(Vertex v) const { return stables_of[v].size() == 1; }
};

/// Throws InputError if the cover references vertices outside g.
PrivacyIndex privacy(const Graph& g, const Cover& cover);

/// Vertices of element `index` that lie in no other element of that kind,
/// in increasing order.
VertexList private_vertices(const PrivacyIndex& index, const Cover& cover, ElementKind kind, std::size_t element);

/// Every clique and every stable set has a private vertex.
/// Throws PreconditionError unless `cover` is a normal cover of g.
bool is_minimal(const Graph& g, const Cover& cover);

/// Drops redundant elements, stable sets first and then cliques, each in
/// listed order. The result is a minimal normal cover made of elements of
/// `cover`, in their original relative order.
Cover minimalize(const Graph& g, const Cover& cover);

/// One C-reduce (or S-reduce) call.
struct ReductionStep {
  std::size_t level = 0;
  ElementKind side = ElementKind::clique;
  std::size_t element = 0;  // index into the cover before the step
  Vertex vertex = 0;
  std::optional<Vertex> partner;  // set for a contraction
  std::size_t n_after = 0;
  std::size_t cliques_after = 0;
  std::size_t stables_after = 0;

  bool contracted() const noexcept { return partner.has_value(); }
};

struct ReduceResult {
  Graph graph;
  Cover cover;
  ReductionStep step;
};

/// C-reduce on clique `clique_index` with private vertex v.
///
/// If v is the only private vertex of the clique, v is deleted together with
/// the clique (stable sets lose v; any that become empty are dropped).
/// Otherwise the lowest-indexed other private vertex v' is chosen, all edges
/// from v and v' to vertices outside the clique are removed and vv' is
/// contracted: the lower index survives and higher indices shift down.
///
/// Throws PreconditionError if v is not private to the clique.
ReduceResult c_reduce(const Graph& g, const Cover& cover, std::size_t clique_index, Vertex v);

/// The dual of c_reduce, run on the complement with the cover sides swapped.
ReduceResult s_reduce(const Graph& g, const Cover& cover, std::size_t stable_index, Vertex v);

/// A private vertex for every element of one side of a minimal cover;
/// vertices[i] is private to element i.
struct GeneratorSet {
  ElementKind kind = ElementKind::clique;
  VertexList vertices;
};

/// Picks the highest-indexed private vertex of each element.
/// Throws PreconditionError if some element has no private vertex.
GeneratorSet find_generators(const Graph& g, const Cover& cover, ElementKind kind);

/// Vertices that generate both sides at once: vertices[i] is private to
/// cliques[clique_of[i]] and to stables[stable_of[i]].
struct DoubleGenerators {
  VertexList vertices;
  std::vector<std::size_t> clique_of;
  std::vector<std::size_t> stable_of;
};

/// Perfect matching between cliques and stable sets through vertices private
/// to both, or nullopt if none exists (or the sides differ in size).
std::optional<DoubleGenerators> find_double_generators(const Graph& g, const Cover& cover);

/// The three matrix identities over the t x t incidence products, plus the
/// rank consequence n >= 2t.
struct MattReport {
  std::size_t t = 0;
  std::size_t n = 0;
  bool sum_all_is_J = false;
  bool sum_generators_is_I = false;
  bool sum_rest_is_J_minus_I = false;
  bool n_at_least_2t = false;

  bool ok() const noexcept { return sum_all_is_J && sum_generators_is_I && sum_rest_is_J_minus_I && n_at_least_2t; }
};

/// Throws PreconditionError if n <= 1, the cover is not minimal and normal,
/// or `u` is not a double generator set for it.
MattReport matt_report(const Graph& g, const Cover& cover, const DoubleGenerators& u);
bool matt_check(const Graph& g, const Cover& cover, const DoubleGenerators& u);

/// |cliques| + |stables| <= n + 1. Throws PreconditionError unless the
/// cover is minimal and normal.
bool central_check(const Graph& g, const Cover& cover);

/// State of one pipeline level, recorded after minimalizing.
struct LevelRecord {
  std::size_t level = 0;
  std::size_t c = 0;
  std::size_t s = 0;
  std::size_t n = 0;
  std::size_t cliques = 0;
  std::size_t stables = 0;
  bool cover_ok = false;    // (c, s)-normal at this level
  bool central_ok = false;  // |C| + |S| <= n + 1
  bool bound_ok = false;    // n <= 2^(c+s) - 1
  bool halving_ok = true;   // vertices kept by this level's reduction >= (n - 1) / 2
  bool terminal = false;    // c == 1, s == 1 or n == 0: checks n <= c + s - 1
  std::optional<ElementKind> reduced;
};

struct ReductionTrace {
  std::vector<LevelRecord> levels;
  std::vector<ReductionStep> steps;
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

struct PipelineResult {
  ReductionTrace trace;
  Graph graph;
  Cover cover;
  std::size_t c = 0;
  std::size_t s = 0;
};

/// Repeatedly minimalizes and reduces every element of the smaller side
/// (cliques on a tie) until c = 1, s = 1 or the graph is empty. Every level
/// is checked against the cover conditions, |C| + |S| <= n + 1 and
/// n <= 2^(c+s) - 1; failures are collected in trace.violations.
///
/// Throws PreconditionError unless `cover` is a (c, s)-normal cover of g.
PipelineResult reduction_pipeline(const Graph& g, const Cover& cover, std::size_t c, std::size_t s);

}  // namespace normcov
