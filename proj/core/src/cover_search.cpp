#include <algorithm>
#include <limits>

#include "normcov/enumerate.hpp"
#include "normcov/errors.hpp"
#include "normcov/search.hpp"

namespace normcov {

namespace {

constexpr std::size_t kMaxCandidates = std::size_t{1} << 20;
constexpr std::size_t kMaxCompatibilityBits = std::size_t{1} << 31;

/// Cliques of size <= limit that cannot be extended within the limit.
std::vector<VertexList> saturated_cliques(const Graph& g, std::size_t limit) {
  const std::size_t n = g.order();
  std::vector<VertexList> out;
  if (limit == 0) return out;
  std::vector<Bitset> above(n, Bitset(n));
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = v + 1; w < n; ++w) above[v].set(w);
  }
  VertexList current;
  // later: common neighbours greater than the last vertex; common: all common neighbours
  auto grow = [&](auto&& self, const Bitset& later, const Bitset& common) -> void {
    if (current.size() == limit || common.none()) {
      out.push_back(current);
      if (out.size() > kMaxCandidates) throw PreconditionError("find_cover: too many candidate sets");
      return;
    }
    later.for_each([&](std::size_t w) {
      current.push_back(static_cast<Vertex>(w));
      self(self, later & g.neighbours(static_cast<Vertex>(w)) & above[w], common & g.neighbours(static_cast<Vertex>(w)));
      current.pop_back();
    });
  };
  for (std::size_t v = 0; v < n; ++v) {
    current = {static_cast<Vertex>(v)};
    grow(grow, g.neighbours(static_cast<Vertex>(v)) & above[v], g.neighbours(static_cast<Vertex>(v)));
  }
  std::stable_sort(out.begin(), out.end(), [](const VertexList& a, const VertexList& b) { return a.size() > b.size(); });
  return out;
}

class CoverSearch {
 public:
  CoverSearch(const Graph& g, std::size_t c, std::size_t s, const SearchBudget& budget)
      : n_(g.order()), meter_(budget) {
    cliques_ = saturated_cliques(g, c);
    stables_ = saturated_cliques(complement(g), s);
    if (cliques_.size() * stables_.size() > kMaxCompatibilityBits) {
      throw PreconditionError("find_cover: candidate space too large");
    }
    clique_vertices_ = vertex_masks(cliques_);
    stable_vertices_ = vertex_masks(stables_);
    cliques_at_ = containing(cliques_);
    stables_at_ = containing(stables_);
    stables_meeting_.reserve(cliques_.size());
    for (const auto& k : cliques_) {
      Bitset meet(stables_.size());
      for (const Vertex v : k) meet |= stables_at_[v];
      stables_meeting_.push_back(std::move(meet));
    }
    for (const auto& st : stables_) {
      Bitset meet(cliques_.size());
      for (const Vertex v : st) meet |= cliques_at_[v];
      cliques_meeting_.push_back(std::move(meet));
    }
  }

  CoverSearchResult run() {
    CoverSearchResult result;
    Bitset allowed_k(cliques_.size(), true);
    Bitset allowed_s(stables_.size(), true);
    Bitset covered_k(n_);
    Bitset covered_s(n_);
    const bool found = search(allowed_k, allowed_s, covered_k, covered_s);
    result.nodes = meter_.nodes();
    if (found) {
      result.status = SearchStatus::found;
      Cover cover;
      for (const auto i : chosen_k_) cover.cliques.push_back(cliques_[i]);
      for (const auto j : chosen_s_) cover.stables.push_back(stables_[j]);
      std::sort(cover.cliques.begin(), cover.cliques.end());
      std::sort(cover.stables.begin(), cover.stables.end());
      result.cover = std::move(cover);
    } else {
      result.status = meter_.exhausted() ? SearchStatus::budget_exhausted : SearchStatus::none_exists;
    }
    return result;
  }

 private:
  std::vector<Bitset> vertex_masks(const std::vector<VertexList>& family) const {
    std::vector<Bitset> out;
    for (const auto& set : family) {
      Bitset mask(n_);
      for (const Vertex v : set) mask.set(v);
      out.push_back(std::move(mask));
    }
    return out;
  }

  std::vector<Bitset> containing(const std::vector<VertexList>& family) const {
    std::vector<Bitset> out(n_, Bitset(family.size()));
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (const Vertex v : family[i]) out[v].set(i);
    }
    return out;
  }

  bool search(Bitset& allowed_k, Bitset& allowed_s, const Bitset& covered_k, const Bitset& covered_s) {
    if (!meter_.tick()) return false;

    // Most constrained uncovered (vertex, side).
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::size_t best_vertex = 0;
    bool best_is_clique = true;
    for (std::size_t v = 0; v < n_ && best > 0; ++v) {
      if (!covered_k.test(v)) {
        const std::size_t options = allowed_k.intersection_count(cliques_at_[v]);
        if (options < best) {
          best = options;
          best_vertex = v;
          best_is_clique = true;
        }
      }
      if (!covered_s.test(v)) {
        const std::size_t options = allowed_s.intersection_count(stables_at_[v]);
        if (options < best) {
          best = options;
          best_vertex = v;
          best_is_clique = false;
        }
      }
    }
    if (best == std::numeric_limits<std::size_t>::max()) return true;  // everything covered
    if (best == 0) return false;

    if (best_is_clique) {
      return branch(allowed_k, allowed_s, cliques_at_[best_vertex], stables_meeting_, clique_vertices_, chosen_k_,
                    covered_k, covered_s, true);
    }
    return branch(allowed_s, allowed_k, stables_at_[best_vertex], cliques_meeting_, stable_vertices_, chosen_s_,
                  covered_s, covered_k, false);
  }

  // Tries each allowed candidate of one side containing the pivot vertex.
  // Candidates already tried are excluded for later siblings.
  bool branch(Bitset& allowed_mine, Bitset& allowed_other, const Bitset& at_pivot, const std::vector<Bitset>& meeting,
              const std::vector<Bitset>& vertices, std::vector<std::size_t>& chosen, const Bitset& covered_mine,
              const Bitset& covered_other, bool mine_is_clique) {
    const Bitset options = allowed_mine & at_pivot;
    const Bitset saved_mine = allowed_mine;
    bool found = false;
    for (std::size_t i = options.find_first(); i != Bitset::npos && !found; i = options.find_next(i + 1)) {
      const Bitset saved_other = allowed_other;
      allowed_other &= meeting[i];
      chosen.push_back(i);
      const Bitset grown = covered_mine | vertices[i];
      found = mine_is_clique ? search(allowed_mine, allowed_other, grown, covered_other)
                             : search(allowed_other, allowed_mine, covered_other, grown);
      if (!found) chosen.pop_back();
      allowed_other = saved_other;
      allowed_mine.reset(i);
      if (meter_.exhausted()) break;
    }
    allowed_mine = saved_mine;
    return found;
  }

  std::size_t n_;
  BudgetMeter meter_;
  std::vector<VertexList> cliques_;
  std::vector<VertexList> stables_;
  std::vector<Bitset> clique_vertices_;
  std::vector<Bitset> stable_vertices_;
  std::vector<Bitset> cliques_at_;  // vertex -> candidate cliques containing it
  std::vector<Bitset> stables_at_;
  std::vector<Bitset> stables_meeting_;  // clique -> stables sharing a vertex
  std::vector<Bitset> cliques_meeting_;
  std::vector<std::size_t> chosen_k_;
  std::vector<std::size_t> chosen_s_;
};

}  // namespace

std::string to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::none_exists:
      return "none_exists";
    case SearchStatus::budget_exhausted:
      return "budget_exhausted";
  }
  return "unknown";
}

CoverSearchResult find_cover(const Graph& g, std::size_t c, std::size_t s, const SearchBudget& budget) {
  if (g.order() > kCompleteCoverSearchLimit && budget.is_unlimited()) {
    throw PreconditionError("find_cover: n = " + std::to_string(g.order()) + " exceeds " +
                            std::to_string(kCompleteCoverSearchLimit) + " without a search budget");
  }
  if (g.order() == 0) return {SearchStatus::found, Cover{}, 0};
  if (c == 0 || s == 0) return {SearchStatus::none_exists, std::nullopt, 0};
  return CoverSearch(g, c, s, budget).run();
}

StableSideResult complete_stable_side(const Graph& g, const std::vector<VertexList>& cliques, std::size_t s,
                                      const SearchBudget& budget) {
  const std::size_t n = g.order();
  validate_cover(Cover{cliques, {}}, n);
  std::vector<std::vector<std::size_t>> cliques_of(n);
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    for (const Vertex v : cliques[i]) cliques_of[v].push_back(i);
  }
  BudgetMeter meter(budget);
  std::vector<std::size_t> hits(cliques.size(), 0);
  std::size_t unhit = cliques.size();
  VertexList chosen;

  auto take = [&](Vertex v) {
    chosen.push_back(v);
    for (const auto i : cliques_of[v]) {
      if (hits[i]++ == 0) --unhit;
    }
  };
  auto drop = [&](Vertex v) {
    chosen.pop_back();
    for (const auto i : cliques_of[v]) {
      if (--hits[i] == 0) ++unhit;
    }
  };
  // allowed: vertices non-adjacent to everything chosen and not chosen.
  auto extend = [&](auto&& self, const Bitset& allowed) -> bool {
    if (!meter.tick()) return false;
    if (unhit == 0) return true;
    if (chosen.size() == s) return false;
    const auto first = static_cast<std::size_t>(std::find(hits.begin(), hits.end(), 0) - hits.begin());
    for (const Vertex w : cliques[first]) {
      if (!allowed.test(w)) continue;
      take(w);
      Bitset next = allowed;
      next.subtract(g.neighbours(w));
      next.reset(w);
      if (self(self, next)) return true;
      drop(w);
      if (meter.exhausted()) return false;
    }
    return false;
  };

  StableSideResult result;
  Bitset covered(n);
  for (Vertex v = 0; v < n; ++v) {
    if (covered.test(v)) continue;
    if (s == 0) {
      result.status = SearchStatus::none_exists;
      return result;
    }
    chosen.clear();
    std::fill(hits.begin(), hits.end(), 0);
    unhit = cliques.size();
    take(v);
    Bitset allowed(n, true);
    allowed.subtract(g.neighbours(v));
    allowed.reset(v);
    if (!extend(extend, allowed)) {
      result.status = meter.exhausted() ? SearchStatus::budget_exhausted : SearchStatus::none_exists;
      result.stables.clear();
      result.nodes = meter.nodes();
      return result;
    }
    VertexList stable = chosen;
    std::sort(stable.begin(), stable.end());
    for (const Vertex w : stable) covered.set(w);
    result.stables.push_back(std::move(stable));
  }
  result.status = SearchStatus::found;
  result.nodes = meter.nodes();
  return result;
}

NSmallResult compute_n_small(std::size_t c, std::size_t s, const GraphSource& graphs, const SearchBudget& per_graph) {
  NSmallResult result;
  while (auto g = graphs()) {
    ++result.graphs_seen;
    const std::size_t n = g->order();
    if (n <= result.n_max) continue;
    if (n > kCompleteCoverSearchLimit && per_graph.is_unlimited()) {
      throw PreconditionError("graph of order " + std::to_string(n) + " exceeds the complete-search bound of " +
                              std::to_string(kCompleteCoverSearchLimit) + "; a per-graph budget is required");
    }
    ++result.graphs_tested;
    auto found = find_cover(*g, c, s, per_graph);
    if (found.status == SearchStatus::found) {
      result.n_max = n;
      result.witness = NormalInstance{std::move(*g), std::move(*found.cover)};
    } else if (found.status == SearchStatus::budget_exhausted) {
      result.complete = false;
    }
  }
  return result;
}

NSmallResult compute_n_small(std::size_t c, std::size_t s, std::size_t max_n) {
  return compute_n_small(c, s, enumeration_source(max_n));
}

// ---------------------------------------------------------------------------

TransversalCheck check_transversal(const RedBlueGraph& h, const Cover& cover, const VertexList& set) {
  validate_cover(Cover{{set}, {}}, h.order());
  TransversalCheck out;
  out.size = set.size();
  out.red_free = true;
  for (std::size_t a = 0; a < set.size() && out.red_free; ++a) {
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      if (h.is_red(set[a], set[b])) {
        out.red_free = false;
        break;
      }
    }
  }
  auto common = [&](const VertexList& other) {
    std::size_t k = 0;
    for (const Vertex v : set) k += std::binary_search(other.begin(), other.end(), v) ? 1 : 0;
    return k;
  };
  out.hits_every_stable =
      std::all_of(cover.stables.begin(), cover.stables.end(), [&](const VertexList& st) { return common(st) > 0; });
  for (const auto& k : cover.cliques) out.overlap = std::max(out.overlap, common(k));
  return out;
}

OptimalnoReport check_transversal_property(const RedBlueGraph& h, const Cover& cover, std::size_t c,
                                           const SearchBudget& budget) {
  const std::size_t n = h.order();
  validate_cover(cover, n);
  OptimalnoReport report;
  report.c = c;

  std::vector<Bitset> red(n, Bitset(n));
  for (Vertex v = 0; v < n; ++v) {
    for (const Vertex w : h.red_neighbours(v)) red[v].set(w);
  }
  std::vector<std::vector<std::size_t>> stables_of(n);
  std::vector<std::vector<std::size_t>> cliques_of(n);
  for (std::size_t j = 0; j < cover.stables.size(); ++j) {
    for (const Vertex v : cover.stables[j]) stables_of[v].push_back(j);
  }
  for (std::size_t i = 0; i < cover.cliques.size(); ++i) {
    for (const Vertex v : cover.cliques[i]) cliques_of[v].push_back(i);
  }
  std::size_t most_stables = 0;
  for (const auto& list : stables_of) most_stables = std::max(most_stables, list.size());

  BudgetMeter meter(budget);
  std::vector<std::size_t> stable_hits(cover.stables.size(), 0);
  std::vector<std::size_t> clique_hits(cover.cliques.size(), 0);
  std::size_t unhit = cover.stables.size();
  VertexList chosen;

  auto record = [&] {
    ++report.sets_examined;
    const std::size_t overlap =
        clique_hits.empty() ? 0 : *std::max_element(clique_hits.begin(), clique_hits.end());
    if (chosen.size() != c || overlap + 1 < c) {
      ++report.violation_count;
      if (report.violations.size() < kMaxStoredViolations) report.violations.push_back({chosen, overlap});
    }
  };

  // Sets in lexicographic order; `allowed` holds later vertices with no red
  // pair to the chosen ones.
  auto extend = [&](auto&& self, const Bitset& allowed) -> void {
    if (!meter.tick()) return;
    if (unhit == 0 && !chosen.empty()) record();
    const std::size_t room = c - chosen.size();
    if (room == 0 || unhit > room * most_stables) return;
    for (std::size_t v = allowed.find_first(); v != Bitset::npos; v = allowed.find_next(v + 1)) {
      chosen.push_back(static_cast<Vertex>(v));
      for (const auto j : stables_of[v]) {
        if (stable_hits[j]++ == 0) --unhit;
      }
      for (const auto i : cliques_of[v]) ++clique_hits[i];
      Bitset next = allowed;
      next.subtract(red[v]);
      for (std::size_t w = 0; w <= v; ++w) next.reset(w);
      self(self, next);
      for (const auto j : stables_of[v]) {
        if (--stable_hits[j] == 0) ++unhit;
      }
      for (const auto i : cliques_of[v]) --clique_hits[i];
      chosen.pop_back();
      if (meter.exhausted()) return;
    }
  };
  extend(extend, Bitset(n, true));
  report.nodes = meter.nodes();
  report.complete = !meter.exhausted();
  return report;
}

OptimalnoReport check_optimalno(std::size_t c, const SearchBudget& budget) {
  if (c == 0 || c > kMaxFcLevel) throw InputError("check_optimalno: c out of range");
  if (c > 5 && budget.is_unlimited()) {
    throw PreconditionError("check_optimalno: c > 5 requires a search budget");
  }
  const LabeledRB fc = build_fc(c);
  return check_transversal_property(fc.rb, fc.cover, c, budget);
}

}  // namespace normcov
