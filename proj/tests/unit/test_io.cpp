#include <doctest.h>

#include "normcov/constructions.hpp"
#include "normcov/enumerate.hpp"
#include "normcov/errors.hpp"
#include "normcov/io.hpp"
#include "normcov/reduction.hpp"

using namespace normcov;

TEST_CASE("graph6 known strings") {
  CHECK(to_graph6(Graph::complete(3)) == "Bw");
  CHECK(to_graph6(Graph::path(3)) == "Bg");
  CHECK(to_graph6(Graph::complete(4)) == "C~");
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(parse_graph6("Bw") == Graph::complete(3));
  CHECK(parse_graph6(">>graph6<<Bg\n") == Graph::path(3));
}

TEST_CASE("graph6 round trip") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n)) CHECK(parse_graph6(to_graph6(g)) == g);
  // Orders above 62 use the long length prefix.
  const Graph big = Graph::cycle(100);
  const std::string text = to_graph6(big);
  CHECK(text[0] == '~');
  CHECK(parse_graph6(text) == big);
}

TEST_CASE("graph6 errors carry a byte offset") {
  try {
    parse_graph6("C~~");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("B\x7f"), ParseError);
  CHECK_THROWS_AS(parse_graph6("Bx"), ParseError);  // nonzero padding bits
  try {
    parse_graph6_catalog("Bw\nBg\nC~~\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
  }
  CHECK(parse_graph6_catalog("Bw\n\nBg\n").size() == 2);
}

TEST_CASE("JSON round trips are byte identical") {
  const LabeledRB g4 = build_gc(4);
  const std::string graph = dump_json(to_json(g4.rb));
  const std::string cover = dump_json(to_json(g4.cover));
  CHECK(rb_from_json(parse_json(graph)) == g4.rb);
  CHECK(cover_from_json(parse_json(cover)) == g4.cover);
  CHECK(dump_json(to_json(rb_from_json(parse_json(graph)))) == graph);
  CHECK(dump_json(to_json(cover_from_json(parse_json(cover)))) == cover);

  const Graph g = Graph::cycle(7);
  CHECK(graph_from_json(parse_json(dump_json(to_json(g)))) == g);
  CHECK(load_graph_text(dump_json(to_json(g))) == g);
  CHECK(load_graph_text("  " + to_graph6(g) + "\n") == g);

  const MultiH mh = star_multih(5);
  const MultiH back = multih_from_json(parse_json(dump_json(to_json(mh))));
  CHECK(back.h == mh.h);
  CHECK(back.multiplicity == mh.multiplicity);
}

TEST_CASE("JSON input errors name the path") {
  try {
    parse_json("{\"n\": 3,, }");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
  }
  auto message = [](const std::string& text) {
    try {
      graph_from_json(parse_json(text));
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(R"({"edges": []})").find("$.n") != std::string::npos);
  CHECK(message(R"({"n": 3, "edges": [[0, 5]]})").find("$.edges[0]") != std::string::npos);
  CHECK(message(R"({"n": 3, "edges": [[1, 1]]})").find("$.edges[0]") != std::string::npos);
  CHECK(message(R"({"n": -1, "edges": []})").find("$.n") != std::string::npos);
  CHECK_THROWS_AS(validate_cover(cover_from_json(parse_json(R"({"cliques": [[1, 0]], "stables": [[0]]})")), 2),
                  InputError);
  CHECK_THROWS_AS(validate_cover(cover_from_json(parse_json(R"({"cliques": [[0, 7]], "stables": [[0]]})")), 2),
                  InputError);
}

TEST_CASE("trace lines") {
  const LabeledRB g3 = build_gc(3);
  const PipelineResult r = reduction_pipeline(realize_type(g3.rb, AllAbsent{}), g3.cover, 3, 3);
  const std::string lines = trace_to_jsonl(r.trace);
  std::size_t count = 0, start = 0;
  while (start < lines.size()) {
    const std::size_t end = lines.find('\n', start);
    const json doc = parse_json(lines.substr(start, end - start));
    CHECK((doc["type"] == "level" || doc["type"] == "step"));
    ++count;
    start = end + 1;
  }
  CHECK(count == r.trace.levels.size() + r.trace.steps.size());
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
