#include <doctest.h>

#include "normcov/bitset.hpp"
#include "normcov/clique.hpp"
#include "normcov/constructions.hpp"
#include "normcov/cover.hpp"
#include "normcov/errors.hpp"
#include "normcov/fuzz.hpp"
#include "normcov/graph.hpp"
#include "normcov/red_blue.hpp"
#include "normcov/rng.hpp"
#include "oracles.hpp"

using namespace normcov;

TEST_CASE("bitset basics") {
  Bitset b(130);
  CHECK(b.none());
  b.set(0);
  b.set(64);
  b.set(129);
  CHECK(b.count() == 3);
  CHECK(b.find_first() == 0);
  CHECK(b.find_next(1) == 64);
  CHECK(b.find_next(65) == 129);
  CHECK(b.find_next(130) == Bitset::npos);
  Bitset c(130);
  c.set(64);
  CHECK(b.intersects(c));
  CHECK(b.intersection_count(c) == 1);
  CHECK(c.is_subset_of(b));
  b.subtract(c);
  CHECK(!b.test(64));
  Bitset full(70, true);
  CHECK(full.count() == 70);
  full.flip_all();
  CHECK(full.none());
}

TEST_CASE("is_clique and is_stable") {
  const Graph k3 = Graph::complete(3);
  const Graph p3 = Graph::path(3);
  const VertexList all{0, 1, 2}, ends{0, 2}, one{1}, none{};
  CHECK(is_clique(k3, all));
  CHECK(is_clique(p3, none));
  CHECK(is_clique(p3, one));
  CHECK(!is_clique(p3, ends));
  CHECK(is_stable(Graph(3), all));
  CHECK(!is_stable(k3, VertexList{0, 1}));
  CHECK(is_stable(p3, ends));
  CHECK(is_stable(k3, none));
}

TEST_CASE("graph edits") {
  Graph g = Graph::cycle(5);
  CHECK(g.edge_count() == 5);
  CHECK(g.degree(0) == 2);
  const Graph h = g.without_vertex(0);
  CHECK(h.order() == 4);
  CHECK(h.edge_count() == 3);
  const Graph e = g.with_extra_vertices(2);
  CHECK(e.order() == 7);
  CHECK(e.degree(6) == 0);
  g.remove_edge(0, 1);
  CHECK(!g.adjacent(1, 0));
  CHECK_THROWS_AS(g.add_edge(2, 2), InputError);
  CHECK_THROWS_AS(g.add_edge(0, 9), InputError);
}

TEST_CASE("verify_normal_cover on small graphs") {
  const LabeledRB g3 = build_gc(3);
  const Graph g = realize_type(g3.rb, AllAbsent{});
  const CoverReport report = verify_normal_cover(g, g3.cover);
  CHECK(report.is_normal());
  CHECK(report.max_clique_size == 3);
  CHECK(report.max_stable_size == 3);
  CHECK(verify_cs(report, 3, 3));
  CHECK(!verify_cs(report, 2, 3));

  const Graph k1(1);
  const CoverReport r1 = verify_normal_cover(k1, Cover{{{0}}, {{0}}});
  CHECK(r1.is_normal());
  CHECK(verify_cs(r1, 1, 1));

  const Graph k2 = Graph::complete(2);
  const CoverReport r2 = verify_normal_cover(k2, Cover{{{0}, {1}}, {{0, 1}}});
  CHECK(r2.cond_clique_cover);
  CHECK(!r2.cond_stable_cover);
  REQUIRE(r2.failure_witness);
  CHECK(r2.failure_witness->kind == FailureKind::not_a_stable_set);
}

TEST_CASE("verify_cs on G_2") {
  const LabeledRB g2 = build_gc(2);
  CHECK(verify_cs(verify_normal_cover(realize_type(g2.rb, AllAbsent{}), g2.cover), 2, 2));
}

TEST_CASE("verifier agrees with the triple-loop oracle on fuzzed and mutated covers") {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const NormalInstance inst = random_normal_instance(rng);
    CHECK(verify_normal_cover(inst.graph, inst.cover).is_normal());
    CHECK(oracle::is_normal_cover(inst.graph, inst.cover));
    // Drop a vertex from some element or flip an edge; both verdicts must agree.
    Cover broken = inst.cover;
    Graph g = inst.graph;
    if (i % 2 == 0 && !broken.cliques.empty() && broken.cliques[0].size() > 1) {
      broken.cliques[0].erase(broken.cliques[0].begin());
    } else if (g.order() >= 2) {
      const Vertex u = static_cast<Vertex>(rng.below(g.order()));
      const Vertex v = static_cast<Vertex>((u + 1 + rng.below(g.order() - 1)) % g.order());
      g.adjacent(u, v) ? g.remove_edge(u, v) : g.add_edge(u, v);
    }
    CHECK(verify_normal_cover(g, broken).is_normal() == oracle::is_normal_cover(g, broken));
  }
}

TEST_CASE("complement swaps the sides of a normal cover") {
  CHECK(Graph::complete(3).complemented() == Graph(3));
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const NormalInstance inst = random_normal_instance(rng);
    CHECK(verify_normal_cover(complement(inst.graph), inst.cover.swapped()).is_normal());
  }
  for (std::size_t r = 2; r <= 5; ++r) {
    for (std::size_t k = 1; k <= 4; ++k) {
      const LabeledRB h = build_grk(r, k);
      const Graph g = realize_type(h.rb, AllAbsent{});
      CHECK(verify_cs(verify_normal_cover(complement(g), h.cover.swapped()), k + r - 1, 2));
    }
  }
}

TEST_CASE("realize_type") {
  const LabeledRB g2 = build_gc(2);
  const Graph g = realize_type(g2.rb, AllAbsent{});
  const std::vector<Edge> expected{{0, gc_index("00", 2)}, {1, gc_index("10", 2)}};
  CHECK(g.edges() == expected);

  const RedBlueGraph no_red = RedBlueGraph::from_edges(4, std::vector<Edge>{{0, 1}}, std::vector<Edge>{});
  CHECK(realize_type(no_red, AllPresent{}) == Graph::complete(4));

  const LabeledRB g3 = build_gc(3);
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Graph r = realize_type(g3.rb, RandomPairs{0.5, seed});
    CHECK(is_of_type(r, g3.rb));
    CHECK(verify_cs(verify_normal_cover(r, g3.cover), 3, 3));
  }
  // Same seed, same graph.
  CHECK(realize_type(g3.rb, RandomPairs{0.5, 9}) == realize_type(g3.rb, RandomPairs{0.5, 9}));
}

TEST_CASE("verify_rb_cover") {
  for (std::size_t c = 1; c <= 8; ++c) CHECK(is_rb_normal_cover(build_gc(c).rb, build_gc(c).cover, c, c));
  const LabeledRB f5 = build_fc(5);
  CHECK(is_rb_normal_cover(f5.rb, f5.cover, 5, 5));

  const LabeledRB g2 = build_gc(2);
  Cover bad = g2.cover;
  bad.stables[0] = {0, gc_index("00", 2)};  // a blue pair
  CHECK(!is_rb_normal_cover(g2.rb, bad, 2, 2));
  // A free pair inside a clique is not allowed either.
  Cover free_pair = g2.cover;
  free_pair.cliques.push_back({0, 1});
  CHECK(!verify_rb_cover(g2.rb, free_pair).is_normal());
}

TEST_CASE("red-blue graph rejects a pair with two colours") {
  CHECK_THROWS_AS(RedBlueGraph::from_edges(3, std::vector<Edge>{{0, 1}}, std::vector<Edge>{{1, 0}}), InputError);
}

TEST_CASE("clique and independence numbers") {
  CHECK(clique_number(Graph::complete(5)) == 5);
  CHECK(independence_number(Graph::complete(5)) == 1);
  CHECK(clique_number(Graph::cycle(5)) == 2);
  CHECK(independence_number(Graph::cycle(5)) == 2);
  CHECK(clique_number(Graph(0)) == 0);

  const Graph g4 = realize_type(build_gc(4).rb, AllAbsent{});
  REQUIRE(g4.order() == 22);
  CHECK(oracle::omega(g4) == 4);
  CHECK(clique_number(g4) == 4);

  std::uint64_t state = 3;
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(1 + i % 12, (i % 9 + 1) / 10.0, state);
    CHECK(clique_number(g) == oracle::omega(g));
    CHECK(independence_number(g) == oracle::alpha(g));
    const CliqueResult w = maximum_clique(g);
    CHECK(w.exact);
    CHECK(w.witness.size() == w.size);
    CHECK(is_clique(g, w.witness));
  }
}

TEST_CASE("clique search honours its budget") {
  const Graph g = realize_type(build_gc(9).rb, RandomPairs{0.5, 1});
  CliqueOptions options;
  options.budget = SearchBudget::nodes(10);
  const CliqueResult r = maximum_clique(g, options);
  CHECK(!r.exact);
  CHECK(is_clique(g, r.witness));
  CHECK_THROWS_AS(clique_number(g, options), BudgetExhausted);
}

TEST_CASE("rng is reproducible and split streams differ") {
  Rng a(42), b(42);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  Rng r(7);
  for (int i = 0; i < 1000; ++i) CHECK(r.below(13) < 13);
  CHECK(!Rng(1).bernoulli(0.0));
  CHECK(Rng(1).bernoulli(1.0));
}
