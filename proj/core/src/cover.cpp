#include "normcov/cover.hpp"

#include <algorithm>

#include "normcov/errors.hpp"

namespace normcov {

namespace {

void validate_family(const std::vector<VertexList>& family, std::size_t n, const char* what) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& set = family[i];
    const std::string where = std::string(what) + " " + std::to_string(i);
    if (set.empty()) throw InputError(where + " is empty");
    for (std::size_t k = 0; k < set.size(); ++k) {
      if (set[k] >= n) {
        throw InputError(where + " references vertex " + std::to_string(set[k]) + " (n=" + std::to_string(n) +
                         ")");
      }
      if (k > 0 && set[k] <= set[k - 1]) throw InputError(where + " is not strictly increasing");
    }
  }
}

/// Membership lists: for each vertex, the indices of the sets containing it.
std::vector<std::vector<std::size_t>> memberships(const std::vector<VertexList>& family, std::size_t n) {
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (const Vertex v : family[i]) out[v].push_back(i);
  }
  return out;
}

template <typename PairOk>
std::optional<std::pair<Vertex, Vertex>> first_bad_pair(const VertexList& set, PairOk&& ok) {
  for (std::size_t a = 0; a < set.size(); ++a) {
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      if (!ok(set[a], set[b])) return std::pair{set[a], set[b]};
    }
  }
  return std::nullopt;
}

template <typename CliquePair, typename StablePair>
CoverReport verify_impl(std::size_t n, const Cover& cover, CliquePair&& clique_pair, StablePair&& stable_pair) {
  validate_cover(cover, n);
  CoverReport report;
  auto fail = [&](FailureKind kind, std::vector<std::size_t> indices) {
    if (!report.failure_witness) report.failure_witness = FailureWitness{kind, std::move(indices)};
  };

  for (const auto& q : cover.cliques) report.max_clique_size = std::max(report.max_clique_size, q.size());
  for (const auto& s : cover.stables) report.max_stable_size = std::max(report.max_stable_size, s.size());

  const auto in_cliques = memberships(cover.cliques, n);
  const auto in_stables = memberships(cover.stables, n);

  // (1) cliques are cliques and cover every vertex
  report.cond_clique_cover = true;
  for (std::size_t i = 0; i < cover.cliques.size() && report.cond_clique_cover; ++i) {
    if (auto bad = first_bad_pair(cover.cliques[i], clique_pair)) {
      report.cond_clique_cover = false;
      fail(FailureKind::not_a_clique, {i, bad->first, bad->second});
    }
  }
  for (std::size_t v = 0; v < n && report.cond_clique_cover; ++v) {
    if (in_cliques[v].empty()) {
      report.cond_clique_cover = false;
      fail(FailureKind::vertex_not_in_clique, {v});
    }
  }

  // (2) the dual for stable sets
  report.cond_stable_cover = true;
  for (std::size_t j = 0; j < cover.stables.size() && report.cond_stable_cover; ++j) {
    if (auto bad = first_bad_pair(cover.stables[j], stable_pair)) {
      report.cond_stable_cover = false;
      fail(FailureKind::not_a_stable_set, {j, bad->first, bad->second});
    }
  }
  for (std::size_t v = 0; v < n && report.cond_stable_cover; ++v) {
    if (in_stables[v].empty()) {
      report.cond_stable_cover = false;
      fail(FailureKind::vertex_not_in_stable, {v});
    }
  }

  // (3) every clique meets every stable set: stamp the stable sets reached
  // from each clique through its vertices.
  report.cond_intersection = true;
  std::vector<std::size_t> stamp(cover.stables.size(), 0);
  for (std::size_t i = 0; i < cover.cliques.size() && report.cond_intersection; ++i) {
    std::size_t reached = 0;
    for (const Vertex v : cover.cliques[i]) {
      for (const std::size_t j : in_stables[v]) {
        if (stamp[j] != i + 1) {
          stamp[j] = i + 1;
          ++reached;
        }
      }
    }
    if (reached != cover.stables.size()) {
      report.cond_intersection = false;
      const auto miss = std::find_if(stamp.begin(), stamp.end(), [&](std::size_t s) { return s != i + 1; });
      fail(FailureKind::disjoint_pair, {i, static_cast<std::size_t>(miss - stamp.begin())});
    }
  }
  return report;
}

}  // namespace

void validate_cover(const Cover& cover, std::size_t n) {
  validate_family(cover.cliques, n, "clique");
  validate_family(cover.stables, n, "stable set");
}

std::string to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::not_a_clique:
      return "not_a_clique";
    case FailureKind::not_a_stable_set:
      return "not_a_stable_set";
    case FailureKind::vertex_not_in_clique:
      return "vertex_not_in_clique";
    case FailureKind::vertex_not_in_stable:
      return "vertex_not_in_stable";
    case FailureKind::disjoint_pair:
      return "disjoint_pair";
  }
  return "unknown";
}

CoverReport verify_normal_cover(const Graph& g, const Cover& cover) {
  return verify_impl(
      g.order(), cover, [&](Vertex u, Vertex v) { return g.adjacent(u, v); },
      [&](Vertex u, Vertex v) { return !g.adjacent(u, v); });
}

bool verify_cs(const CoverReport& report, std::size_t c, std::size_t s) {
  return report.is_normal() && report.max_clique_size <= c && report.max_stable_size <= s;
}

CoverReport verify_rb_cover(const RedBlueGraph& h, const Cover& cover) {
  return verify_impl(
      h.order(), cover, [&](Vertex u, Vertex v) { return h.is_blue(u, v); },
      [&](Vertex u, Vertex v) { return h.is_red(u, v); });
}

bool is_rb_normal_cover(const RedBlueGraph& h, const Cover& cover, std::size_t c, std::size_t s) {
  return verify_cs(verify_rb_cover(h, cover), c, s);
}

}  // namespace normcov
