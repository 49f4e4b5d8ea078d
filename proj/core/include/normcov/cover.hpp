#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "normcov/graph.hpp"
#include "normcov/red_blue.hpp"

namespace normcov {

/// Candidate normal cover: a family of cliques and a family of stable sets.
/// Every listed set must be nonempty, strictly increasing and in range.
struct Cover {
  std::vector<VertexList> cliques;
  std::vector<VertexList> stables;

  /// Cliques and stable sets exchanged (a cover of the complement).
  Cover swapped() const { return {stables, cliques}; }

  bool operator==(const Cover& other) const = default;
};

/// Throws InputError unless every set is nonempty, sorted, duplicate-free
/// and references only vertices below n.
void validate_cover(const Cover& cover, std::size_t n);

enum class FailureKind {
  not_a_clique,          // indices: {clique, u, v} with u, v non-adjacent
  not_a_stable_set,      // indices: {stable, u, v} with u, v adjacent
  vertex_not_in_clique,  // indices: {v}
  vertex_not_in_stable,  // indices: {v}
  disjoint_pair,         // indices: {clique, stable}
};

std::string to_string(FailureKind kind);

struct FailureWitness {
  FailureKind kind;
  std::vector<std::size_t> indices;

  bool operator==(const FailureWitness& other) const = default;
};

/// Verdict of cover verification.
///
/// cond_clique_cover: every listed clique is a clique and the cliques cover V.
/// cond_stable_cover: the same for stable sets.
/// cond_intersection: every clique meets every stable set.
/// failure_witness holds the first failure, checked in that order.
struct CoverReport {
  bool cond_clique_cover = false;
  bool cond_stable_cover = false;
  bool cond_intersection = false;
  std::size_t max_clique_size = 0;
  std::size_t max_stable_size = 0;
  std::optional<FailureWitness> failure_witness;

  bool is_normal() const noexcept { return cond_clique_cover && cond_stable_cover && cond_intersection; }
};

CoverReport verify_normal_cover(const Graph& g, const Cover& cover);

/// All three conditions hold and the sizes are within (c, s).
bool verify_cs(const CoverReport& report, std::size_t c, std::size_t s);

/// Like verify_normal_cover, with "clique" meaning every pair is blue and
/// "stable set" meaning every pair is red.
CoverReport verify_rb_cover(const RedBlueGraph& h, const Cover& cover);

/// verify_cs(verify_rb_cover(h, cover), c, s).
bool is_rb_normal_cover(const RedBlueGraph& h, const Cover& cover, std::size_t c, std::size_t s);

}  // namespace normcov
