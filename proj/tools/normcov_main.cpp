// normcov: command-line front end.
//
// Exit status: 0 success or property verified, 1 property violated,
// 2 input error, 3 budget exhausted.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "normcov/constructions.hpp"
#include "normcov/cover.hpp"
#include "normcov/enumerate.hpp"
#include "normcov/errors.hpp"
#include "normcov/io.hpp"
#include "normcov/reduction.hpp"
#include "normcov/report.hpp"
#include "normcov/search.hpp"

namespace {

using namespace normcov;

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;

// Everything the manifest needs to know about the current run.
struct Session {
  RunManifest manifest;
  std::string manifest_path;

  std::string read(const std::string& path) {
    std::string text = read_file(path);
    manifest.digests[path] = sha256_hex(text);
    return text;
  }
};

// Errors while reading a named file carry the file name.
class FileInputError : public InputError {
 public:
  FileInputError(const std::string& file, const std::exception& cause)
      : InputError(file + ": " + cause.what()) {}
};

// A graph file is either a red-blue JSON document ("blue"/"red"), a plain
// JSON graph ("edges") or graph6.
struct LoadedGraph {
  std::optional<RedBlueGraph> rb;
  std::optional<Graph> graph;

  std::size_t order() const { return rb ? rb->order() : graph->order(); }
};

LoadedGraph load_graph(Session& session, const std::string& path) {
  const std::string text = session.read(path);
  try {
    LoadedGraph out;
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      json doc = parse_json(text);
      if (doc.is_object() && doc.contains("graph") && doc.contains("cover")) doc = doc["graph"];
      if (doc.is_object() && (doc.contains("blue") || doc.contains("red"))) {
        out.rb = rb_from_json(doc);
      } else {
        out.graph = graph_from_json(doc);
      }
    } else {
      out.graph = load_graph_text(text);
    }
    return out;
  } catch (const InputError& e) {
    throw FileInputError(path, e);
  }
}

Cover load_cover(Session& session, const std::string& path, std::size_t n) {
  const std::string text = session.read(path);
  try {
    json doc = parse_json(text);
    if (doc.is_object() && doc.contains("graph") && doc.contains("cover")) doc = doc["cover"];
    Cover cover = cover_from_json(doc);
    validate_cover(cover, n);
    return cover;
  } catch (const InputError& e) {
    throw FileInputError(path, e);
  }
}

FreePairPolicy parse_policy(const std::string& name, std::uint64_t seed, double p) {
  if (name == "absent") return AllAbsent{};
  if (name == "present") return AllPresent{};
  if (name == "random") return RandomPairs{p, seed};
  throw InputError("unknown realization policy '" + name + "' (absent, present, random)");
}

SearchBudget make_budget(std::uint64_t nodes, double seconds) {
  SearchBudget budget;
  if (nodes > 0) {
    budget.max_nodes = nodes;
    budget.deterministic = seconds <= 0;
  }
  if (seconds > 0) budget.max_seconds = seconds;
  return budget;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  const auto start = std::chrono::steady_clock::now();
  Session session;
  {
    std::ostringstream line;
    for (int i = 0; i < argc; ++i) line << (i ? " " : "") << argv[i];
    session.manifest.command_line = line.str();
  }
  session.manifest.versions = build_versions();

  CLI::App app{"Normal covers of graphs: constructions, verification, reduction and search"};
  app.require_subcommand(1);
  app.add_option("--manifest", session.manifest_path, "Write a JSON run manifest to this file");
  std::uint64_t seed = 20240607;

  int status = kOk;

  // construct ---------------------------------------------------------------
  auto* construct = app.add_subcommand("construct", "Build a family member with its standard cover");
  construct->require_subcommand(1);
  std::size_t c = 0, s = 0, r = 0, k = 0;
  std::string out_prefix;
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_prefix, "Write PREFIX.graph.json, PREFIX.cover.json, PREFIX.labels.json");
  };
  auto write_family = [&](const json& graph, const json& cover, const json& labels, const json& all) {
    if (out_prefix.empty()) {
      std::cout << dump_json(all);
      return;
    }
    write_file(out_prefix + ".graph.json", dump_json(graph));
    write_file(out_prefix + ".cover.json", dump_json(cover));
    if (!labels.is_null()) write_file(out_prefix + ".labels.json", dump_json(labels));
  };
  auto emit_labeled = [&](const LabeledRB& family) {
    write_family(to_json(family.rb), to_json(family.cover), json(family.labels), to_json(family));
  };
  auto* gc_cmd = construct->add_subcommand("gc", "The red-blue graph G_c");
  gc_cmd->add_option("--c", c, "Level")->required()->check(CLI::Range(std::size_t{1}, kMaxGcLevel));
  add_out(gc_cmd);
  gc_cmd->callback([&] { emit_labeled(build_gc(c)); });
  auto* fc_cmd = construct->add_subcommand("fc", "The red-blue graph F_c");
  fc_cmd->add_option("--c", c, "Level")->required()->check(CLI::Range(std::size_t{1}, kMaxFcLevel));
  add_out(fc_cmd);
  fc_cmd->callback([&] { emit_labeled(build_fc(c)); });
  auto* grk_cmd = construct->add_subcommand("grk", "The red-blue graph G_{r,k}");
  grk_cmd->add_option("--r", r, "Number of stars")->required();
  grk_cmd->add_option("--k", k, "Leaves per star")->required();
  add_out(grk_cmd);
  grk_cmd->callback([&] { emit_labeled(build_grk(r, k)); });
  auto* star_cmd = construct->add_subcommand("star", "The star expansion, (3,s)-normal");
  star_cmd->add_option("--s", s, "Stable-set bound")->required();
  add_out(star_cmd);
  star_cmd->callback([&] {
    const NormalInstance inst = build_star_expansion(s);
    write_family(to_json(inst.graph), to_json(inst.cover), json(), to_json(inst));
  });

  // verify ------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Check a normal cover");
  std::string graph_path, cover_path, realize;
  std::optional<std::size_t> vc, vs;
  double probability = 0.5;
  verify->add_option("--graph", graph_path, "Graph file (red-blue JSON, graph JSON or graph6)")->required();
  verify->add_option("--cover", cover_path, "Cover JSON")->required();
  verify->add_option("--c", vc, "Clique size bound");
  verify->add_option("--s", vs, "Stable-set size bound");
  verify->add_option("--realize", realize, "Realize a red-blue graph first: absent, present or random");
  verify->add_option("--seed", seed, "Seed for --realize random");
  verify->add_option("--p", probability, "Edge probability for --realize random");
  verify->callback([&] {
    const LoadedGraph loaded = load_graph(session, graph_path);
    const Cover cover = load_cover(session, cover_path, loaded.order());
    CoverReport report;
    if (loaded.rb && realize.empty()) {
      report = verify_rb_cover(*loaded.rb, cover);
    } else {
      const Graph g = loaded.rb ? realize_type(*loaded.rb, parse_policy(realize, seed, probability)) : *loaded.graph;
      report = verify_normal_cover(g, cover);
    }
    bool ok = report.is_normal();
    if (vc || vs) {
      ok = ok && verify_cs(report, vc.value_or(report.max_clique_size), vs.value_or(report.max_stable_size));
    }
    json out = to_json(report);
    out["verified"] = ok;
    if (vc) out["c"] = *vc;
    if (vs) out["s"] = *vs;
    std::cout << dump_json(out);
    session.manifest.outcomes["verify"] = ok ? "pass" : "fail";
    status = ok ? kOk : kViolated;
  });

  // reduce ------------------------------------------------------------------
  auto* reduce = app.add_subcommand("reduce", "Minimalize, apply one C-reduce step, or run the pipeline");
  bool pipeline = false;
  std::string trace_out, out_path, kind_name = "clique";
  std::optional<std::size_t> element;
  std::optional<Vertex> vertex;
  reduce->add_option("--graph", graph_path, "Graph file")->required();
  reduce->add_option("--cover", cover_path, "Cover JSON")->required();
  reduce->add_option("--c", vc, "Clique size bound (pipeline)");
  reduce->add_option("--s", vs, "Stable-set size bound (pipeline)");
  reduce->add_flag("--pipeline", pipeline, "Run the iterated reduction with level checks");
  reduce->add_option("--trace-out", trace_out, "Pipeline trace as JSON lines (default stdout)");
  reduce->add_option("--kind", kind_name, "Element kind for a single step: clique or stable");
  reduce->add_option("--element", element, "Cover element index for a single step");
  reduce->add_option("--vertex", vertex, "Private vertex for a single step");
  reduce->add_option("--realize", realize, "Realization policy for red-blue input (default absent)");
  reduce->add_option("--seed", seed, "Seed for --realize random");
  reduce->add_option("--out", out_path, "Result graph+cover JSON (default stdout)");
  reduce->callback([&] {
    const LoadedGraph loaded = load_graph(session, graph_path);
    const Cover cover = load_cover(session, cover_path, loaded.order());
    const Graph g = loaded.rb ? realize_type(*loaded.rb, parse_policy(realize.empty() ? "absent" : realize, seed,
                                                                      probability))
                              : *loaded.graph;
    if (pipeline) {
      const CoverReport report = verify_normal_cover(g, cover);
      const std::size_t pc = vc.value_or(report.max_clique_size);
      const std::size_t ps = vs.value_or(report.max_stable_size);
      const PipelineResult result = reduction_pipeline(g, cover, pc, ps);
      emit(trace_out, trace_to_jsonl(result.trace));
      for (const auto& v : result.trace.violations) std::cerr << "violation: " << v << "\n";
      session.manifest.outcomes["pipeline"] = result.trace.ok() ? "pass" : "fail";
      status = result.trace.ok() ? kOk : kViolated;
      return;
    }
    if (!verify_normal_cover(g, cover).is_normal()) throw InputError("the cover is not normal");
    const Cover minimal = minimalize(g, cover);
    if (!element) {
      emit(out_path, dump_json({{"graph", to_json(g)}, {"cover", to_json(minimal)}}));
      return;
    }
    if (!vertex) throw InputError("--element requires --vertex");
    if (kind_name != "clique" && kind_name != "stable") throw InputError("--kind must be clique or stable");
    const bool clique = kind_name == "clique";
    const ReduceResult result = clique ? c_reduce(g, minimal, *element, *vertex) : s_reduce(g, minimal, *element, *vertex);
    const bool ok = verify_normal_cover(result.graph, result.cover).is_normal();
    emit(out_path, dump_json({{"graph", to_json(result.graph)},
                              {"cover", to_json(result.cover)},
                              {"step", to_json(result.step)},
                              {"verified", ok}}));
    status = ok ? kOk : kViolated;
  });

  // search ------------------------------------------------------------------
  auto* search = app.add_subcommand("search", "Decide whether a graph has a (c,s)-normal cover");
  std::uint64_t budget_nodes = 0;
  double budget_seconds = 0;
  search->add_option("--graph", graph_path, "Graph file")->required();
  search->add_option("--c", c, "Clique size bound")->required();
  search->add_option("--s", s, "Stable-set size bound")->required();
  search->add_option("--budget-nodes", budget_nodes, "Node budget (0: unlimited)");
  search->add_option("--budget-seconds", budget_seconds, "Time budget (0: unlimited)");
  search->add_option("--realize", realize, "Realization policy for red-blue input (default absent)");
  search->add_option("--seed", seed, "Seed for --realize random");
  search->callback([&] {
    const LoadedGraph loaded = load_graph(session, graph_path);
    const Graph g = loaded.rb ? realize_type(*loaded.rb, parse_policy(realize.empty() ? "absent" : realize, seed,
                                                                      probability))
                              : *loaded.graph;
    const CoverSearchResult result = find_cover(g, c, s, make_budget(budget_nodes, budget_seconds));
    std::cout << dump_json(to_json(result));
    session.manifest.outcomes["search"] = to_string(result.status);
    status = result.status == SearchStatus::found ? kOk
             : result.status == SearchStatus::none_exists ? kViolated
                                                           : kBudget;
  });

  // oracle ------------------------------------------------------------------
  auto* oracle = app.add_subcommand("oracle", "Exhaustive small-case computations");
  oracle->require_subcommand(1);
  auto* nmax = oracle->add_subcommand("n-max", "Largest (c,s)-normal graph in a catalog");
  std::size_t max_n = 7;
  std::string catalog_path;
  nmax->add_option("--c", c, "Clique size bound")->required();
  nmax->add_option("--s", s, "Stable-set size bound")->required();
  auto* max_n_opt = nmax->add_option("--max-n", max_n, "Enumerate all graphs up to this order")
                        ->check(CLI::Range(std::size_t{1}, kMaxEnumerationOrder));
  nmax->add_option("--catalog", catalog_path, "graph6 catalog file instead of enumeration")->excludes(max_n_opt);
  nmax->add_option("--budget-nodes", budget_nodes, "Per-graph node budget (0: unlimited)");
  nmax->callback([&] {
    NSmallResult result;
    if (!catalog_path.empty()) {
      const std::string text = session.read(catalog_path);
      std::vector<Graph> graphs;
      try {
        graphs = parse_graph6_catalog(text);
      } catch (const InputError& e) {
        throw FileInputError(catalog_path, e);
      }
      result = compute_n_small(c, s, catalog_source(std::move(graphs)), make_budget(budget_nodes, 0));
    } else {
      result = budget_nodes > 0 ? compute_n_small(c, s, enumeration_source(max_n), make_budget(budget_nodes, 0))
                                : compute_n_small(c, s, max_n);
    }
    std::cout << dump_json(to_json(result));
    status = result.complete ? kOk : kBudget;
  });
  auto* catalog = oracle->add_subcommand("catalog", "All graphs of one order up to isomorphism, as graph6");
  std::size_t catalog_n = 0;
  catalog->add_option("--n", catalog_n, "Order")->required()->check(CLI::Range(std::size_t{1}, kMaxEnumerationOrder));
  catalog->callback([&] {
    for (const Graph& g : enumerate_graphs(catalog_n)) std::cout << to_graph6(g) << "\n";
  });
  auto* optimalno = oracle->add_subcommand("transversals", "Red-free transversal check on F_c");
  optimalno->add_option("--c", c, "Level")->required()->check(CLI::Range(std::size_t{1}, kMaxFcLevel));
  optimalno->add_option("--budget-nodes", budget_nodes, "Node budget (required for c > 5)");
  optimalno->callback([&] {
    const OptimalnoReport report = check_optimalno(c, make_budget(budget_nodes, 0));
    std::cout << dump_json(to_json(report));
    status = !report.complete ? kBudget : report.confirmed() ? kOk : kViolated;
  });

  // sample ------------------------------------------------------------------
  auto* sample = app.add_subcommand("sample", "Seeded experiments on realizations of G_c");
  sample->require_subcommand(1);
  auto* ao = sample->add_subcommand("alpha-omega", "Exact alpha and omega of random realizations");
  std::size_t trials = 8;
  AlphaOmegaOptions ao_options;
  ao->add_option("--c", c, "Level")->required();
  ao->add_option("--trials", trials, "Number of realizations");
  ao->add_option("--seed", seed, "Base seed");
  ao->add_option("--p", ao_options.probability, "Probability of a free pair becoming an edge");
  ao->add_option("--node-budget", ao_options.node_budget, "Node budget per exact search");
  ao->callback([&] {
    session.manifest.seed = seed;
    const AlphaOmegaReport report = sample_alpha_omega(c, trials, seed, ao_options);
    std::cout << dump_json(to_json(report));
  });
  auto* mn = sample->add_subcommand("mnozica", "Uncoloured pairs inside random 4c-subsets");
  std::uint64_t samples = 100000;
  mn->add_option("--c", c, "Level")->required();
  mn->add_option("--samples", samples, "Number of subsets");
  mn->add_option("--seed", seed, "Base seed");
  mn->callback([&] {
    session.manifest.seed = seed;
    std::cout << dump_json(to_json(mnozica_estimate(c, samples, seed)));
  });

  // report ------------------------------------------------------------------
  auto* report = app.add_subcommand("report", "Run the acceptance suite; write markdown and JSON tables");
  AcceptanceOptions acceptance;
  std::string out_md, out_json;
  std::vector<int> only;
  report->add_option("--seed", acceptance.seed, "Seed for every randomized criterion");
  report->add_option("--out-md", out_md, "Markdown report path");
  report->add_option("--out-json", out_json, "JSON report path");
  report->add_option("--only", only, "Run only these criteria");
  report->add_flag("--c5", acceptance.optimalno_c5, "Include the exhaustive transversal check on F_5");
  report->callback([&] {
    acceptance.only.insert(only.begin(), only.end());
    acceptance.on_result = [](const CriterionResult& r) {
      std::printf("%s %2d %s -- %s\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(), r.detail.c_str());
      std::fflush(stdout);
    };
    session.manifest.seed = acceptance.seed;
    const auto results = run_acceptance(acceptance);
    bool all = true;
    json criteria = json::array();
    for (const auto& res : results) {
      all = all && res.passed;
      session.manifest.outcomes[std::to_string(res.id)] = res.passed ? "pass" : "fail";
      criteria.push_back(to_json(res));
    }
    session.manifest.digests["criteria"] = sha256_hex(dump_json(criteria));
    session.manifest.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out_md.empty()) write_file(out_md, acceptance_markdown(results, session.manifest));
    if (!out_json.empty()) write_file(out_json, dump_json(acceptance_json(results, session.manifest)));
    status = all ? kOk : kViolated;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    status = kBudget;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    status = kViolated;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    status = kInputError;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    status = kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    status = kInputError;
  }

  if (!session.manifest_path.empty()) {
    if (session.manifest.seed == 0) session.manifest.seed = seed;
    session.manifest.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    session.manifest.outcomes["exit_code"] = std::to_string(status);
    try {
      write_file(session.manifest_path, dump_json(to_json(session.manifest)));
    } catch (const std::exception& e) {
      std::cerr << "cannot write manifest: " << e.what() << "\n";
    }
  }
  return status;
}
