#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "normcov/constructions.hpp"
#include "normcov/io.hpp"

namespace {

namespace fs = std::filesystem;

const fs::path& scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("normcov_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int run(const std::string& args) {
  const std::string command = std::string(NORMCOV_CLI) + " " + args + " > " +
                              (scratch() / "stdout.txt").string() + " 2> " + (scratch() / "stderr.txt").string();
  const int raw = std::system(command.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string path(const std::string& name) { return (scratch() / name).string(); }

std::string output() { return normcov::read_file(path("stdout.txt")); }
std::string errors() { return normcov::read_file(path("stderr.txt")); }

}  // namespace

TEST_CASE("construct then verify") {
  REQUIRE(run("construct gc --c 4 --out " + path("g4")) == 0);
  const auto graph = normcov::parse_json(normcov::read_file(path("g4.graph.json")));
  CHECK(graph["n"] == 22);
  CHECK(fs::exists(path("g4.labels.json")));
  CHECK(run("verify --graph " + path("g4.graph.json") + " --cover " + path("g4.cover.json") + " --c 4 --s 4") == 0);
  CHECK(run("verify --graph " + path("g4.graph.json") + " --cover " + path("g4.cover.json") + " --c 3 --s 4") == 1);
  CHECK(run("verify --graph " + path("g4.graph.json") + " --cover " + path("g4.cover.json") +
            " --realize random --seed 5") == 0);
}

TEST_CASE("construct output round trips byte for byte") {
  REQUIRE(run("construct fc --c 4 --out " + path("f4")) == 0);
  const std::string graph = normcov::read_file(path("f4.graph.json"));
  const std::string cover = normcov::read_file(path("f4.cover.json"));
  CHECK(normcov::dump_json(normcov::to_json(normcov::rb_from_json(normcov::parse_json(graph)))) == graph);
  CHECK(normcov::dump_json(normcov::to_json(normcov::cover_from_json(normcov::parse_json(cover)))) == cover);
  REQUIRE(run("construct fc --c 4") == 0);
  const auto all = normcov::parse_json(output());
  CHECK(normcov::dump_json(all["graph"]) == graph);
}

TEST_CASE("input errors exit with status 2 and a position") {
  normcov::write_file(path("bad.json"), "{\"n\": 3, \"edges\": [[0,1],]}");
  CHECK(run("verify --graph " + path("bad.json") + " --cover " + path("bad.json")) == 2);
  CHECK(errors().find("byte") != std::string::npos);
  normcov::write_file(path("bad.g6"), "C~~\n");
  CHECK(run("search --graph " + path("bad.g6") + " --c 2 --s 2") == 2);
  CHECK(errors().find("byte 2") != std::string::npos);
  CHECK(run("verify --graph " + path("missing.json") + " --cover " + path("missing.json")) == 2);
  CHECK(run("construct gc --c 0") == 2);
  CHECK(run("no-such-command") == 2);
}

TEST_CASE("search exit codes") {
  normcov::write_file(path("c5.json"), "{\"n\":5,\"edges\":[[0,1],[1,2],[2,3],[3,4],[0,4]]}");
  CHECK(run("search --graph " + path("c5.json") + " --c 2 --s 2") == 1);
  normcov::write_file(path("c4.json"), "{\"n\":4,\"edges\":[[0,1],[1,2],[2,3],[0,3]]}");
  CHECK(run("search --graph " + path("c4.json") + " --c 2 --s 2") == 0);
  REQUIRE(run("construct gc --c 4 --out " + path("g4b")) == 0);
  CHECK(run("search --graph " + path("g4b.graph.json") + " --c 4 --s 4 --budget-nodes 3") == 3);
  CHECK(run("search --graph " + path("g4b.graph.json") + " --c 4 --s 4") == 2);  // needs a budget
}

TEST_CASE("reduce, oracle and sample subcommands") {
  REQUIRE(run("construct gc --c 3 --out " + path("g3")) == 0);
  CHECK(run("reduce --graph " + path("g3.graph.json") + " --cover " + path("g3.cover.json") +
            " --pipeline --trace-out " + path("trace.jsonl")) == 0);
  CHECK(normcov::read_file(path("trace.jsonl")).find("\"type\":\"level\"") != std::string::npos);
  CHECK(run("reduce --graph " + path("g3.graph.json") + " --cover " + path("g3.cover.json") +
            " --kind clique --element 0 --vertex " + std::to_string(normcov::gc_index("000", 3))) == 0);
  CHECK(normcov::parse_json(output())["verified"] == true);
  CHECK(run("oracle n-max --c 2 --s 2 --max-n 6") == 0);
  CHECK(normcov::parse_json(output())["n_max"] == 4);
  CHECK(run("oracle catalog --n 4") == 0);
  normcov::write_file(path("four.g6"), output());
  CHECK(run("oracle n-max --c 2 --s 2 --catalog " + path("four.g6")) == 0);
  CHECK(normcov::parse_json(output())["n_max"] == 4);
  CHECK(run("oracle transversals --c 3") == 0);
  CHECK(run("sample mnozica --c 4 --samples 2000 --seed 4") == 0);
  const std::string first = output();
  CHECK(run("sample mnozica --c 4 --samples 2000 --seed 4") == 0);
  CHECK(output() == first);
  CHECK(run("sample alpha-omega --c 4 --trials 3 --seed 4") == 0);
}

TEST_CASE("report and manifest") {
  CHECK(run("--manifest " + path("m.json") + " report --only 1 --only 10 --seed 3 --out-md " + path("r.md") +
            " --out-json " + path("r.json")) == 0);
  const auto manifest = normcov::parse_json(normcov::read_file(path("m.json")));
  CHECK(manifest["seed"] == 3);
  CHECK(manifest["outcomes"]["1"] == "pass");
  const auto report = normcov::parse_json(normcov::read_file(path("r.json")));
  CHECK(report["criteria"].size() == 2);
  CHECK(normcov::read_file(path("r.md")).find("| 10 |") != std::string::npos);
}
