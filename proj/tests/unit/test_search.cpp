#include <doctest.h>

#include <numeric>
#include <set>

#include "normcov/constructions.hpp"
#include "normcov/enumerate.hpp"
#include "normcov/errors.hpp"
#include "normcov/isomorphism.hpp"
#include "normcov/rng.hpp"
#include "normcov/search.hpp"
#include "oracles.hpp"

using namespace normcov;

TEST_CASE("find_cover examples") {
  // C5 is not normal: five edge cliques cannot all meet a stable pair, and
  // the brute-force oracle agrees for every bound.
  const Graph c5 = Graph::cycle(5);
  CHECK(find_cover(c5, 2, 2).status == SearchStatus::none_exists);
  CHECK(!oracle::has_cs_cover(c5, 2, 2));
  CHECK(find_cover(c5, 5, 5).status == SearchStatus::none_exists);
  CHECK(!oracle::has_cs_cover(c5, 5, 5));

  const Graph c6 = Graph::cycle(6);
  const CoverSearchResult r = find_cover(c6, 2, 3);
  REQUIRE(r.status == SearchStatus::found);
  REQUIRE(r.cover);
  CHECK(verify_cs(verify_normal_cover(c6, *r.cover), 2, 3));
  CHECK(oracle::is_normal_cover(c6, *r.cover));

  for (std::size_t s = 1; s <= 5; ++s) CHECK(find_cover(c5, 1, s).status == SearchStatus::none_exists);

  const CoverSearchResult k4 = find_cover(Graph::complete(4), 4, 1);
  REQUIRE(k4.cover);
  CHECK(k4.cover->cliques == std::vector<VertexList>{{0, 1, 2, 3}});
  CHECK(k4.cover->stables.size() == 4);

  CHECK(find_cover(Graph(0), 1, 1).status == SearchStatus::found);
}

TEST_CASE("find_cover agrees with the brute-force oracle") {
  std::uint64_t state = 17;
  int found = 0;
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 5);
    const Graph g = oracle::random_graph(n, 0.2 + 0.15 * (i % 5), state);
    const std::size_t c = 1 + static_cast<std::size_t>(i / 5 % 3);
    const std::size_t s = 1 + static_cast<std::size_t>(i / 15 % 3);
    const CoverSearchResult r = find_cover(g, c, s);
    const bool expected = oracle::has_cs_cover(g, c, s);
    CHECK((r.status == SearchStatus::found) == expected);
    if (r.cover) {
      ++found;
      CHECK(oracle::is_normal_cover(g, *r.cover));
      CHECK(verify_cs(verify_normal_cover(g, *r.cover), c, s));
    }
  }
  CHECK(found > 50);
}

TEST_CASE("find_cover on every graph with at most 5 vertices matches the oracle") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n))
      for (std::size_t c = 1; c <= 3; ++c)
        for (std::size_t s = 1; s <= 3; ++s)
          CHECK((find_cover(g, c, s).status == SearchStatus::found) == oracle::has_cs_cover(g, c, s));
}

TEST_CASE("find_cover budget and size limit") {
  const Graph big = realize_type(build_gc(4).rb, AllAbsent{});
  CHECK_THROWS_AS(find_cover(big, 4, 4), PreconditionError);
  const CoverSearchResult tiny = find_cover(big, 4, 4, SearchBudget::nodes(3));
  CHECK(tiny.status == SearchStatus::budget_exhausted);
  const CoverSearchResult ok = find_cover(big, 4, 4, SearchBudget::nodes(1'000'000));
  REQUIRE(ok.status == SearchStatus::found);
  CHECK(verify_cs(verify_normal_cover(big, *ok.cover), 4, 4));
}

TEST_CASE("complete_stable_side") {
  const LabeledRB g3 = build_gc(3);
  const Graph g = realize_type(g3.rb, AllAbsent{});
  const StableSideResult r = complete_stable_side(g, g3.cover.cliques, 3);
  REQUIRE(r.status == SearchStatus::found);
  CHECK(verify_cs(verify_normal_cover(g, Cover{g3.cover.cliques, r.stables}), 3, 3));
  CHECK(complete_stable_side(g, g3.cover.cliques, 2).status == SearchStatus::none_exists);
}

TEST_CASE("graph enumeration counts") {
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (std::size_t n = 1; n <= 7; ++n) CHECK(enumerate_graphs(n).size() == expected[n]);
  CHECK_THROWS(enumerate_graphs(kMaxEnumerationOrder + 1));
}

TEST_CASE("enumerated graphs are canonical and pairwise non-isomorphic") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<std::uint64_t> forms;
    std::vector<Vertex> identity(n);
    std::iota(identity.begin(), identity.end(), Vertex{0});
    for (const Graph& g : enumerate_graphs(n)) {
      const std::uint64_t best = oracle::max_code(g);
      CHECK(oracle::code(g, identity) == best);
      CHECK(is_canonical(g));
      forms.insert(best);
    }
    CHECK(forms.size() == enumerate_graphs(n).size());
  }
  // The path 0-1-2 has code 101; the hub-first labelling gives 110.
  CHECK(!is_canonical(Graph::path(3)));
}

TEST_CASE("compute_n_small") {
  const NSmallResult r13 = compute_n_small(1, 3, 5);
  CHECK(r13.n_max == 3);
  REQUIRE(r13.witness);
  CHECK(r13.witness->graph == Graph(3));  // the edgeless graph; K_3 is (3,1)-normal instead
  CHECK(compute_n_small(3, 1, 5).witness->graph == Graph::complete(3));

  CHECK(compute_n_small(2, 2, 6).n_max == 4);
  const NSmallResult r23 = compute_n_small(2, 3, 7);
  CHECK(r23.n_max == 6);
  CHECK(r23.complete);
  REQUIRE(r23.witness);
  CHECK(verify_cs(verify_normal_cover(r23.witness->graph, r23.witness->cover), 2, 3));

  // Among the order-6 graphs some (2,3)-normal one is of type G_{2,2}.
  const RedBlueGraph g22 = build_grk(2, 2).rb;
  bool typed = false;
  for (const Graph& g : enumerate_graphs(6)) {
    if (find_type_embedding(g, g22) && find_cover(g, 2, 3).status == SearchStatus::found) typed = true;
  }
  CHECK(typed);

  const std::vector<Graph> catalog{Graph::complete(2), Graph::cycle(5), Graph::cycle(4), Graph(3)};
  const NSmallResult from_catalog = compute_n_small(2, 2, catalog_source(catalog));
  CHECK(from_catalog.n_max == 4);
  CHECK(from_catalog.witness->graph == Graph::cycle(4));
}

TEST_CASE("transversal property of F_c") {
  for (std::size_t c = 1; c <= 4; ++c) {
    const OptimalnoReport report = check_optimalno(c);
    CHECK(report.confirmed());
    CHECK(report.sets_examined > 0);
  }
  CHECK_THROWS_AS(check_optimalno(6), PreconditionError);
  const OptimalnoReport limited = check_optimalno(6, SearchBudget::nodes(100));
  CHECK(!limited.complete);
}

TEST_CASE("the transversal property fails for G_5") {
  const LabeledRB g5 = build_gc(5);
  const TransversalCheck x = check_transversal(g5.rb, g5.cover, {gc_index("0", 5), gc_index("1", 5)});
  CHECK(x.red_free);
  CHECK(x.hits_every_stable);
  CHECK(x.is_counterexample(5));
  const OptimalnoReport report = check_transversal_property(g5.rb, g5.cover, 5, SearchBudget::nodes(5'000'000));
  CHECK(report.violation_count > 0);
  REQUIRE(!report.violations.empty());
  for (const auto& v : report.violations) {
    const TransversalCheck again = check_transversal(g5.rb, g5.cover, v.set);
    CHECK(again.is_counterexample(5));
  }
}

TEST_CASE("rb isomorphism") {
  const LabeledRB g3 = build_gc(3);
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    std::vector<Vertex> perm(g3.rb.order());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    for (std::size_t k = perm.size(); k > 1; --k) std::swap(perm[k - 1], perm[rng.below(k)]);
    std::vector<Edge> blue, red;
    for (const auto& [u, v] : g3.rb.blue_edges()) blue.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
    for (const auto& [u, v] : g3.rb.red_edges()) red.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
    const RedBlueGraph shuffled = RedBlueGraph::from_edges(perm.size(), blue, red);
    const auto phi = rb_isomorphism(g3.rb, shuffled);
    REQUIRE(phi);
    CHECK(is_rb_isomorphism(g3.rb, shuffled, *phi));
  }
  // Recolouring one blue pair red changes the class.
  std::vector<Edge> blue = g3.rb.blue_edges(), red = g3.rb.red_edges();
  red.push_back(blue.back());
  blue.pop_back();
  CHECK(!rb_isomorphic(g3.rb, RedBlueGraph::from_edges(g3.rb.order(), blue, red)));
}
