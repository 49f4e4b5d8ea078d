#include <doctest.h>

#include <algorithm>

#include "normcov/constructions.hpp"
#include "normcov/cover.hpp"
#include "normcov/errors.hpp"
#include "normcov/fuzz.hpp"
#include "normcov/reduction.hpp"
#include "normcov/rng.hpp"
#include "oracles.hpp"

using namespace normcov;

namespace {

Graph absent(const LabeledRB& family) { return realize_type(family.rb, AllAbsent{}); }

bool contains(const VertexList& set, Vertex v) { return std::find(set.begin(), set.end(), v) != set.end(); }

}  // namespace

TEST_CASE("privacy") {
  const LabeledRB g2 = build_gc(2);
  const PrivacyIndex index = privacy(absent(g2), g2.cover);
  for (Vertex v = 0; v < 4; ++v) {
    CHECK(index.cliques_of[v].size() == 1);
    CHECK(index.stables_of[v].size() == 1);
  }
  for (std::size_t i = 0; i < g2.cover.cliques.size(); ++i) {
    CHECK(private_vertices(index, g2.cover, ElementKind::clique, i) == g2.cover.cliques[i]);
  }

  const Graph p3 = Graph::path(3);
  const Cover shared{{{0, 1}, {1, 2}}, {{0, 2}, {1}}};
  const PrivacyIndex shared_index = privacy(p3, shared);
  CHECK(!contains(private_vertices(shared_index, shared, ElementKind::clique, 0), 1));
  CHECK(!contains(private_vertices(shared_index, shared, ElementKind::clique, 1), 1));

  const PrivacyIndex empty = privacy(Graph(3), Cover{});
  for (Vertex v = 0; v < 3; ++v) CHECK(empty.cliques_of[v].empty());
}

TEST_CASE("is_minimal and minimalize") {
  for (std::size_t c = 1; c <= 10; ++c) {
    const LabeledRB gc = build_gc(c);
    CHECK(is_minimal(absent(gc), gc.cover));
  }
  CHECK(is_minimal(Graph(1), Cover{{{0}}, {{0}}}));

  const LabeledRB g3 = build_gc(3);
  const Graph g = absent(g3);
  Cover dup = g3.cover;
  dup.cliques.push_back(dup.cliques.front());
  CHECK(!is_minimal(g, dup));
  CHECK(minimalize(g, g3.cover) == g3.cover);
  const Cover fixed = minimalize(g, dup);
  CHECK(fixed.cliques.size() == g3.cover.cliques.size());
  CHECK(is_minimal(g, fixed));

  Rng rng(200);
  for (int i = 0; i < 200; ++i) {
    const NormalInstance inst = random_normal_instance(rng);
    // Duplicated elements keep the cover normal and are redundant.
    Cover padded = inst.cover;
    padded.cliques.push_back(padded.cliques.front());
    padded.stables.push_back(padded.stables.back());
    const Cover m = minimalize(inst.graph, padded);
    CHECK(is_minimal(inst.graph, m));
    CHECK(oracle::is_normal_cover(inst.graph, m));
  }
}

TEST_CASE("c_reduce examples") {
  const LabeledRB g2 = build_gc(2);
  const Graph g = absent(g2);
  const ReduceResult r = c_reduce(g, g2.cover, 0, 0);
  CHECK(r.step.contracted());
  CHECK(r.graph.order() == 3);
  CHECK(oracle::is_normal_cover(r.graph, r.cover));

  const ReduceResult k1 = c_reduce(Graph(1), Cover{{{0}}, {{0}}}, 0, 0);
  CHECK(k1.graph.order() == 0);
  CHECK(k1.cover.cliques.empty());
  CHECK(!k1.step.contracted());

  // A vertex that is not private is rejected.
  const Cover shared{{{0, 1}, {1, 2}}, {{0, 2}, {1}}};
  CHECK_THROWS_AS(c_reduce(Graph::path(3), shared, 0, 1), PreconditionError);
}

TEST_CASE("one C-reduce per clique of G_3 gives a (2,3)-normal graph on 6 vertices") {
  const LabeledRB g3 = build_gc(3);
  const PipelineResult result = reduction_pipeline(absent(g3), g3.cover, 3, 3);
  REQUIRE(result.trace.levels.size() >= 2);
  const LevelRecord& next = result.trace.levels[1];
  CHECK(next.n == 6);
  CHECK(next.c == 2);
  CHECK(next.s == 3);
  CHECK(next.cover_ok);
}

TEST_CASE("s_reduce mirrors c_reduce under complementation") {
  Rng rng(77);
  for (int i = 0; i < 100; ++i) {
    const NormalInstance inst = random_normal_instance(rng);
    const Cover cover = minimalize(inst.graph, inst.cover);
    const PrivacyIndex index = privacy(inst.graph, cover);
    for (std::size_t j = 0; j < cover.stables.size(); ++j) {
      const VertexList priv = private_vertices(index, cover, ElementKind::stable, j);
      REQUIRE(!priv.empty());
      const ReduceResult s = s_reduce(inst.graph, cover, j, priv.front());
      const ReduceResult c = c_reduce(inst.graph.complemented(), cover.swapped(), j, priv.front());
      CHECK(s.graph == c.graph.complemented());
      CHECK(s.cover == c.cover.swapped());
      CHECK(oracle::is_normal_cover(s.graph, s.cover));
    }
  }
  const ReduceResult k1 = s_reduce(Graph(1), Cover{{{0}}, {{0}}}, 0, 0);
  CHECK(k1.graph.order() == 0);
  CHECK(k1.cover.stables.empty());
}

TEST_CASE("every legal C-reduce step keeps the cover normal") {
  Rng rng(4242);
  FuzzOptions options;
  options.max_n = 14;
  std::size_t steps = 0;
  for (int i = 0; i < 300; ++i) {
    const NormalInstance inst = random_normal_instance(rng, options);
    const Cover cover = minimalize(inst.graph, inst.cover);
    const PrivacyIndex index = privacy(inst.graph, cover);
    for (std::size_t j = 0; j < cover.cliques.size(); ++j) {
      for (const Vertex v : private_vertices(index, cover, ElementKind::clique, j)) {
        const ReduceResult r = c_reduce(inst.graph, cover, j, v);
        CHECK(r.graph.order() + 1 == inst.graph.order());
        CHECK(r.step.n_after == r.graph.order());
        CHECK(oracle::is_normal_cover(r.graph, r.cover));
        ++steps;
      }
    }
  }
  CHECK(steps > 300);
}

TEST_CASE("generators") {
  for (std::size_t c = 1; c <= 10; ++c) {
    const LabeledRB gc = build_gc(c);
    const Graph g = absent(gc);
    for (const auto kind : {ElementKind::clique, ElementKind::stable}) {
      const GeneratorSet u = find_generators(g, gc.cover, kind);
      CHECK(u.vertices.size() == std::size_t{1} << (c - 1));
      for (const Vertex v : u.vertices) {
        CHECK(gc.labels[v].size() == c);
        CHECK(gc.labels[v].back() == '0');
      }
    }
  }
  const Cover no_private{{{0, 1}, {0, 1}}, {{0}, {1}}};
  CHECK_THROWS_AS(find_generators(Graph::complete(2), no_private, ElementKind::clique), PreconditionError);
}

TEST_CASE("matrix identities against a dense recomputation") {
  for (std::size_t c = 2; c <= 7; ++c) {
    const LabeledRB gc = build_gc(c);
    const Graph g = absent(gc);
    const auto u = find_double_generators(g, gc.cover);
    REQUIRE(u);
    const std::size_t t = gc.cover.cliques.size();
    REQUIRE(u->vertices.size() == t);
    CHECK(matt_check(g, gc.cover, *u));
    const MattReport report = matt_report(g, gc.cover, *u);
    CHECK(report.ok());
    CHECK(report.n >= 2 * report.t);

    // Stable j is renumbered to sit opposite the clique sharing its generator.
    std::vector<std::size_t> stable_for_clique(t);
    for (std::size_t k = 0; k < t; ++k) stable_for_clique[u->clique_of[k]] = u->stable_of[k];
    for (std::size_t a = 0; a < t; ++a) {
      for (std::size_t b = 0; b < t; ++b) {
        const auto& clique = gc.cover.cliques[a];
        const auto& stable = gc.cover.stables[stable_for_clique[b]];
        int all = 0, rest = 0;
        for (const Vertex x : clique) {
          if (!contains(stable, x)) continue;
          ++all;
          if (!contains(u->vertices, x)) ++rest;
        }
        CHECK(all == 1);
        CHECK(rest == (a == b ? 0 : 1));
      }
    }
  }
  CHECK_THROWS_AS(matt_report(Graph(1), Cover{{{0}}, {{0}}}, DoubleGenerators{{0}, {0}, {0}}), PreconditionError);
}

TEST_CASE("central inequality") {
  const LabeledRB g3 = build_gc(3);
  CHECK(central_check(absent(g3), g3.cover));
  CHECK(g3.cover.cliques.size() + g3.cover.stables.size() == 8);
  CHECK(central_check(Graph(1), Cover{{{0}}, {{0}}}));
  Rng rng(500);
  for (int i = 0; i < 500; ++i) {
    const NormalInstance inst = random_normal_instance(rng);
    const Cover m = minimalize(inst.graph, inst.cover);
    CHECK(m.cliques.size() + m.stables.size() <= inst.graph.order() + 1);
    CHECK(central_check(inst.graph, m));
  }
}

TEST_CASE("reduction pipeline") {
  const LabeledRB g3 = build_gc(3);
  const PipelineResult r3 = reduction_pipeline(absent(g3), g3.cover, 3, 3);
  CHECK(r3.trace.ok());
  REQUIRE(!r3.trace.levels.empty());
  CHECK(r3.trace.levels.back().terminal);
  CHECK((r3.graph.order() == 0 || r3.graph.edge_count() == 0 || r3.graph == Graph::complete(r3.graph.order())));
  for (const auto& level : r3.trace.levels) {
    CHECK(level.cover_ok);
    CHECK(level.bound_ok);
  }

  // c = 1: cliques are single vertices, so the graph is edgeless with n <= s.
  for (std::size_t s = 1; s <= 5; ++s) {
    Cover cover;
    VertexList all;
    for (Vertex v = 0; v < s; ++v) {
      cover.cliques.push_back({v});
      all.push_back(v);
    }
    cover.stables.push_back(all);
    const PipelineResult r = reduction_pipeline(Graph(s), cover, 1, s);
    CHECK(r.trace.ok());
    REQUIRE(r.trace.levels.size() == 1);
    CHECK(r.trace.levels[0].terminal);
    CHECK(r.trace.levels[0].n == s);
  }

  const LabeledRB f5 = build_fc(5);
  const PipelineResult r5 = reduction_pipeline(absent(f5), f5.cover, 5, 5);
  CHECK(r5.trace.ok());
  for (const auto& level : r5.trace.levels) CHECK(level.cover_ok);

  // The complement runs the same pipeline with the sides swapped.
  const PipelineResult rc = reduction_pipeline(absent(g3).complemented(), g3.cover.swapped(), 3, 3);
  CHECK(rc.trace.ok());
  REQUIRE(rc.trace.levels.size() >= 2);
  CHECK(rc.trace.levels[1].n == 6);

  CHECK_THROWS_AS(reduction_pipeline(absent(g3), g3.cover, 2, 3), PreconditionError);
}

TEST_CASE("pipeline on fuzzed instances") {
  Rng rng(31337);
  for (int i = 0; i < 200; ++i) {
    const NormalInstance inst = random_normal_instance(rng);
    const CoverReport report = verify_normal_cover(inst.graph, inst.cover);
    const PipelineResult r = reduction_pipeline(inst.graph, inst.cover, report.max_clique_size, report.max_stable_size);
    CHECK(r.trace.ok());
    for (std::size_t k = 1; k < r.trace.steps.size(); ++k) {
      const auto& prev = r.trace.steps[k - 1];
      const auto& cur = r.trace.steps[k];
      if (cur.level == prev.level) CHECK(cur.n_after + 1 == prev.n_after);
    }
  }
}
