#include "normcov/report.hpp"

#include <openssl/opensslv.h>

#include <chrono>
#include <cmath>
#include <set>
#include <sstream>

#include "normcov/clique.hpp"
#include "normcov/constructions.hpp"
#include "normcov/cover.hpp"
#include "normcov/errors.hpp"
#include "normcov/fuzz.hpp"
#include "normcov/io.hpp"
#include "normcov/isomorphism.hpp"
#include "normcov/reduction.hpp"
#include "normcov/rng.hpp"
#include "normcov/search.hpp"

#ifndef NORMCOV_VERSION
#define NORMCOV_VERSION "unknown"
#endif

namespace normcov {

namespace {

// Accumulates failures for one criterion.
struct Check {
  std::vector<std::string> failures;
  json data = json::object();

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::uint64_t isqrt_ceil(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while (r * r < x) ++r;
  return r;
}

std::uint64_t pow_u64(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

void criterion_sizes(Check& ck) {
  json sizes = json::object();
  for (std::size_t c = 1; c <= 16; ++c) {
    const std::uint64_t expected = 3 * pow_u64(2, c - 1) - 2;
    const LabeledRB gc = build_gc(c);
    sizes[std::to_string(c)] = gc.rb.order();
    ck.expect(gc.rb.order() == expected && gc.labels.size() == expected,
              "|G_" + std::to_string(c) + "| = " + std::to_string(gc.rb.order()) + ", expected " +
                  std::to_string(expected));
  }
  ck.data["orders"] = sizes;
}

void criterion_standard_covers(Check& ck) {
  for (std::size_t c = 1; c <= 12; ++c) {
    const LabeledRB gc = build_gc(c);
    ck.expect(is_rb_normal_cover(gc.rb, gc.cover, c, c), "G_" + std::to_string(c) + " standard cover fails");
    const LabeledRB fc = build_fc(c);
    ck.expect(is_rb_normal_cover(fc.rb, fc.cover, c, c), "F_" + std::to_string(c) + " standard cover fails");
    ck.data["F_" + std::to_string(c)] = {{"n", fc.rb.order()}, {"cliques", fc.cover.cliques.size()}};
    ck.data["G_" + std::to_string(c)] = {{"n", gc.rb.order()}, {"cliques", gc.cover.cliques.size()}};
  }
}

void criterion_f_sizes(Check& ck) {
  std::map<std::size_t, std::uint64_t> f;
  for (std::size_t c = 1; c <= 14; ++c) f[c] = build_fc(c).rb.order();
  ck.expect(f[4] == 25, "f_4 = " + std::to_string(f[4]));
  ck.expect(f[5] == 55, "f_5 = " + std::to_string(f[5]));
  for (std::size_t c = 3; c <= 14; ++c) {
    ck.expect(f[c] == 5 * f[c - 2] + 5, "f_" + std::to_string(c) + " breaks the recursion");
  }
  for (std::size_t c = 6; c <= 14; ++c) {
    const std::uint64_t floor_bound = isqrt_ceil(pow_u64(5, c));  // ceil(sqrt(5)^c)
    ck.expect(f[c] >= floor_bound, "f_" + std::to_string(c) + " < ceil(sqrt5^c) = " + std::to_string(floor_bound));
  }
  json values = json::object();
  for (const auto& [c, v] : f) values[std::to_string(c)] = v;
  ck.data["f"] = values;
}

void criterion_two_descriptions(Check& ck) {
  std::uint64_t pairs = 0;
  for (std::size_t c = 1; c <= 7; ++c) {
    const LabeledRB gc = build_gc(c);
    // Labels must be exactly the binary sequences of length 1..c, those of
    // length c ending in 0.
    std::set<std::string> expected;
    for (std::size_t len = 1; len <= c; ++len) {
      for (std::uint32_t bits = 0; bits < (1U << len); ++bits) {
        std::string label;
        for (std::size_t i = 0; i < len; ++i) label.push_back((bits >> (len - 1 - i)) & 1U ? '1' : '0');
        if (len < c || label.back() == '0') expected.insert(label);
      }
    }
    const std::set<std::string> actual(gc.labels.begin(), gc.labels.end());
    ck.expect(actual == expected && actual.size() == gc.labels.size(),
              "G_" + std::to_string(c) + " label table differs from the binary-sequence description");
    const auto n = static_cast<Vertex>(gc.rb.order());
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        ++pairs;
        if (gc_adjacency_oracle(gc.labels[u], gc.labels[v], c) != gc.rb.color(u, v)) {
          ck.expect(false, "G_" + std::to_string(c) + " pair " + gc.labels[u] + "," + gc.labels[v] + " disagrees");
        }
      }
    }
  }
  ck.data["pairs_compared"] = pairs;
}

void criterion_c_reduce(Check& ck, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 5));
  std::uint64_t steps = 0;
  std::uint64_t violations = 0;
  FuzzOptions options;
  options.max_n = 14;
  for (int instance = 0; instance < 1000; ++instance) {
    const NormalInstance raw = random_normal_instance(rng, options);
    const Cover cover = minimalize(raw.graph, raw.cover);
    const PrivacyIndex index = privacy(raw.graph, cover);
    for (const auto kind : {ElementKind::clique, ElementKind::stable}) {
      const auto& family = kind == ElementKind::clique ? cover.cliques : cover.stables;
      for (std::size_t i = 0; i < family.size(); ++i) {
        for (const Vertex v : private_vertices(index, cover, kind, i)) {
          const ReduceResult r = kind == ElementKind::clique ? c_reduce(raw.graph, cover, i, v)
                                                             : s_reduce(raw.graph, cover, i, v);
          ++steps;
          const bool ok = r.graph.order() + 1 == raw.graph.order() && verify_normal_cover(r.graph, r.cover).is_normal();
          if (!ok) {
            ++violations;
            if (violations <= 5) {
              ck.expect(false, "instance " + std::to_string(instance) + ": " + to_string(kind) + " " +
                                   std::to_string(i) + " vertex " + std::to_string(v));
            }
          }
        }
      }
    }
  }
  ck.data["instances"] = 1000;
  ck.data["steps"] = steps;
  ck.data["violations"] = violations;
}

void criterion_pipeline(Check& ck) {
  json runs = json::array();
  for (const bool f_family : {false, true}) {
    for (std::size_t c = 1; c <= 6; ++c) {
      const LabeledRB family = f_family ? build_fc(c) : build_gc(c);
      const std::string name = (f_family ? "F_" : "G_") + std::to_string(c);
      const Graph g = realize_type(family.rb, AllAbsent{});
      const PipelineResult result = reduction_pipeline(g, family.cover, c, c);
      bool central = true;
      bool bound = true;
      for (const auto& level : result.trace.levels) {
        central = central && level.central_ok;
        bound = bound && level.bound_ok;
      }
      ck.expect(result.trace.ok(), name + ": " +
                                       (result.trace.violations.empty() ? std::string() : result.trace.violations.front()));
      ck.expect(central && bound, name + ": level check failed");
      runs.push_back({{"graph", name},
                      {"n", g.order()},
                      {"levels", result.trace.levels.size()},
                      {"steps", result.trace.steps.size()},
                      {"final_n", result.graph.order()}});
    }
  }
  ck.data["runs"] = runs;
}

void criterion_matt(Check& ck) {
  json rows = json::array();
  for (std::size_t c = 2; c <= 8; ++c) {
    const LabeledRB gc = build_gc(c);
    const Graph g = realize_type(gc.rb, AllAbsent{});
    const auto u = find_double_generators(g, gc.cover);
    if (!u) {
      ck.expect(false, "G_" + std::to_string(c) + ": no double generator set");
      continue;
    }
    const MattReport report = matt_report(g, gc.cover, *u);
    ck.expect(report.ok(), "G_" + std::to_string(c) + ": identities fail");
    ck.expect(report.t == pow_u64(2, c - 1), "G_" + std::to_string(c) + ": t != 2^(c-1)");
    rows.push_back(to_json(report));
  }
  ck.data["matt"] = rows;
}

void criterion_exact_values(Check& ck) {
  json values = json::object();
  auto run = [&](std::size_t c, std::size_t s, std::size_t expected) {
    const NSmallResult r = compute_n_small(c, s, 7);
    const std::string key = "N(" + std::to_string(c) + "," + std::to_string(s) + ")";
    values[key] = r.n_max;
    ck.expect(r.complete && r.n_max == expected, key + " = " + std::to_string(r.n_max) + ", expected " +
                                                     std::to_string(expected));
    if (r.witness) {
      ck.expect(verify_cs(verify_normal_cover(r.witness->graph, r.witness->cover), c, s), key + " witness fails");
    }
  };
  for (std::size_t m = 1; m <= 5; ++m) run(1, m, m);
  run(2, 2, 4);
  run(2, 3, 6);
  for (const bool f_family : {false, true}) {
    const LabeledRB family = f_family ? build_fc(3) : build_gc(3);
    const std::string name = f_family ? "F_3" : "G_3";
    for (const FreePairPolicy policy : {FreePairPolicy{AllAbsent{}}, FreePairPolicy{AllPresent{}},
                                        FreePairPolicy{RandomPairs{0.5, 7}}}) {
      const Graph g = realize_type(family.rb, policy);
      ck.expect(g.order() == 10, name + " does not have 10 vertices");
      ck.expect(verify_cs(verify_normal_cover(g, family.cover), 3, 3), name + " realization is not (3,3)-normal");
    }
  }
  values["N(3,3)_lower_bound_witnesses"] = {"G_3", "F_3"};
  values["N(3,3)_upper_bound"] = "not verified";
  ck.data["values"] = values;
}

void criterion_star(Check& ck) {
  json rows = json::array();
  for (std::size_t s = 4; s <= 12; ++s) {
    const std::size_t d = (s + 2) / 3;
    const std::size_t expected = (s - 2 * d + 2) * (d * d + d + 1);
    const NormalInstance inst = build_star_expansion(s);
    ck.expect(inst.graph.order() == expected, "s=" + std::to_string(s) + ": n = " + std::to_string(inst.graph.order()));
    ck.expect(verify_cs(verify_normal_cover(inst.graph, inst.cover), 3, s),
              "s=" + std::to_string(s) + ": cover is not (3,s)-normal");
    rows.push_back({{"s", s}, {"d", d}, {"n", inst.graph.order()}});
  }
  ck.data["stars"] = rows;
}

void criterion_grk(Check& ck) {
  std::size_t count = 0;
  for (std::size_t r = 2; r <= 8; ++r) {
    for (std::size_t k = 1; k <= 8; ++k) {
      const LabeledRB h = build_grk(r, k);
      const std::string name = "G_{" + std::to_string(r) + "," + std::to_string(k) + "}";
      ck.expect(h.rb.order() == r * (k + 1), name + " has the wrong order");
      ck.expect(is_rb_normal_cover(h.rb, h.cover, 2, k + r - 1), name + " cover is not (2,k+r-1)-normal");
      ++count;
    }
  }
  ck.data["instances"] = count;
}

void criterion_optimalno(Check& ck, bool include_c5) {
  json rows = json::array();
  const std::size_t top = include_c5 ? 5 : 4;
  for (std::size_t c = 1; c <= top; ++c) {
    const OptimalnoReport report = check_optimalno(c);
    ck.expect(report.confirmed(), "F_" + std::to_string(c) + ": " + std::to_string(report.violation_count) +
                                      " violations");
    rows.push_back({{"c", c}, {"sets_examined", report.sets_examined}, {"violations", report.violation_count}});
  }
  ck.data["checks"] = rows;
  ck.data["c5_included"] = include_c5;

  const LabeledRB g5 = build_gc(5);
  const VertexList x{gc_index("0", 5), gc_index("1", 5)};
  const TransversalCheck tx = check_transversal(g5.rb, g5.cover, x);
  ck.expect(tx.is_counterexample(5), "G_5 set {0,1} is not a counterexample");
  VertexList y{gc_index("00", 5), gc_index("01", 5), gc_index("10", 5), gc_index("11", 5)};
  std::sort(y.begin(), y.end());
  const TransversalCheck ty = check_transversal(g5.rb, g5.cover, y);
  const TransversalCheck ty_dual = check_transversal(g5.rb.swapped_colors(), g5.cover.swapped(), y);
  ck.expect(ty.red_free && ty.hits_every_stable && ty_dual.hits_every_stable,
            "G_5 set {00,01,10,11} does not meet every cover element");
  ck.data["G5_counterexample"] = {{"set", x}, {"size", tx.size}, {"overlap", tx.overlap}};
}

void criterion_triples_and_pairs(Check& ck, std::uint64_t seed) {
  const LabeledRB g4 = build_gc(4);
  const LabeledRB reduced = remove_triples(g4, 4);
  const LabeledRB g3 = build_gc(3);
  ck.expect(reduced.rb.order() == 10, "remove_triples(G_4, 4) has " + std::to_string(reduced.rb.order()) + " vertices");
  ck.expect(rb_isomorphic(reduced.rb, g3.rb), "remove_triples(G_4, 4) is not isomorphic to G_3");
  ck.expect(is_rb_normal_cover(reduced.rb, reduced.cover, 3, 3), "repaired cover is not (3,3)-normal");
  for (std::size_t t = 0; t <= 4; ++t) {
    const LabeledRB partial = remove_triples(g4, t);
    ck.expect(is_rb_normal_cover(partial.rb, partial.cover, 4, 4), "t=" + std::to_string(t) + " cover fails");
  }

  Rng rng(derive_seed(seed, 12));
  std::size_t max_delta_alpha = 0;
  std::size_t max_delta_omega = 0;
  for (int instance = 0; instance < 100; ++instance) {
    const NormalInstance base = random_normal_instance(rng, {});
    const NormalInstance grown = add_universal_pair(base.graph, base.cover);
    ck.expect(verify_normal_cover(grown.graph, grown.cover).is_normal(),
              "instance " + std::to_string(instance) + ": cover after augmentation fails");
    const std::size_t w0 = clique_number(base.graph);
    const std::size_t w1 = clique_number(grown.graph);
    const std::size_t a0 = independence_number(base.graph);
    const std::size_t a1 = independence_number(grown.graph);
    ck.expect(w1 >= w0 && w1 - w0 <= 2 && a1 >= a0 && a1 - a0 <= 2,
              "instance " + std::to_string(instance) + ": alpha/omega grew by more than 2");
    max_delta_omega = std::max(max_delta_omega, w1 - w0);
    max_delta_alpha = std::max(max_delta_alpha, a1 - a0);
  }
  ck.data["max_delta_omega"] = max_delta_omega;
  ck.data["max_delta_alpha"] = max_delta_alpha;
}

json statistical_reports(std::uint64_t seed, const AcceptanceOptions& options) {
  json out = json::object();
  AlphaOmegaOptions ao;
  ao.node_budget = options.alpha_omega_node_budget;
  const std::map<std::size_t, std::size_t> trials{{8, 8}, {10, 4}, {12, 2}};
  for (const auto& [c, count] : trials) {
    out["alpha_omega_c" + std::to_string(c)] = to_json(sample_alpha_omega(c, count, seed, ao));
  }
  out["mnozica_c8"] = to_json(mnozica_estimate(8, options.mnozica_samples, seed));
  return out;
}

void criterion_statistics(Check& ck, const AcceptanceOptions& options) {
  const json first = statistical_reports(options.seed, options);
  const json second = statistical_reports(options.seed, options);
  const std::string a = dump_json(first);
  const std::string b = dump_json(second);
  ck.expect(a == b, "statistical reports differ between two runs");
  ck.data = first;
  ck.data["sha256"] = sha256_hex(a);
}

struct Spec {
  int id;
  const char* title;
  double limit;
};

constexpr Spec kCriteria[kCriterionCount] = {
    {1, "G_c orders 3*2^(c-1)-2 for c = 1..16", 1},
    {2, "standard covers of G_c and F_c are (c,c)-normal, c = 1..12", 30},
    {3, "F_c orders: f_4 = 25, f_5 = 55, recursion and sqrt(5)^c bound for c = 6..14", 1},
    {4, "recursive and binary-sequence descriptions of G_c agree, c <= 7", 10},
    {5, "C-reduce keeps 1000 fuzzed minimal covers normal", 120},
    {6, "reduction pipeline on G_c, F_c (c <= 6): n <= 2^(c+s)-1 and |C|+|S| <= n+1 at every level", 60},
    {7, "matrix identities and n >= 2t on G_c standard covers, c = 2..8", 5},
    {8, "N(1,m) = m (m <= 5), N(2,2) = 4, N(2,3) = 6 over all graphs with n <= 7; N(3,3) >= 10 witnesses", 600},
    {9, "star expansions are (3,s)-normal with (s-2d+2)(d^2+d+1) vertices, s = 4..12", 10},
    {10, "G_{r,k} is (2,k+r-1)-normal with r(k+1) vertices, 2 <= r, k <= 8", 5},
    {11, "red-free transversals of F_c (c <= 4) have size c and overlap >= c-1; G_5 counterexample", 300},
    {12, "remove_triples(G_4, 4) = G_3; universal pair grows alpha, omega by <= 2", 60},
    {13, "alpha/omega sampling (c = 8, 10, 12) and 4c-subset estimator are reproducible", 0},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> results;
  for (const Spec& spec : kCriteria) {
    if (!options.only.empty() && !options.only.contains(spec.id)) continue;
    CriterionResult result;
    result.id = spec.id;
    result.title = spec.title;
    result.limit_seconds = spec.limit;
    Check ck;
    const auto start = std::chrono::steady_clock::now();
    try {
      switch (spec.id) {
        case 1: criterion_sizes(ck); break;
        case 2: criterion_standard_covers(ck); break;
        case 3: criterion_f_sizes(ck); break;
        case 4: criterion_two_descriptions(ck); break;
        case 5: criterion_c_reduce(ck, options.seed); break;
        case 6: criterion_pipeline(ck); break;
        case 7: criterion_matt(ck); break;
        case 8: criterion_exact_values(ck); break;
        case 9: criterion_star(ck); break;
        case 10: criterion_grk(ck); break;
        case 11: criterion_optimalno(ck, options.optimalno_c5); break;
        case 12: criterion_triples_and_pairs(ck, options.seed); break;
        case 13: criterion_statistics(ck, options); break;
        default: break;
      }
    } catch (const std::exception& e) {
      ck.failures.push_back(std::string("exception: ") + e.what());
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = spec.limit <= 0 || result.seconds <= spec.limit;
    result.passed = ck.failures.empty() && in_time;
    if (!ck.failures.empty()) {
      std::ostringstream detail;
      for (std::size_t i = 0; i < ck.failures.size() && i < 5; ++i) detail << (i ? "; " : "") << ck.failures[i];
      if (ck.failures.size() > 5) detail << "; ... (" << ck.failures.size() << " failures)";
      result.detail = detail.str();
    } else if (!in_time) {
      result.detail = "exceeded time limit";
    } else {
      result.detail = "ok";
    }
    result.data = std::move(ck.data);
    if (options.on_result) options.on_result(result);
    results.push_back(std::move(result));
  }
  return results;
}

std::map<std::string, std::string> build_versions() {
  std::map<std::string, std::string> out;
  out["normcov"] = NORMCOV_VERSION;
#if defined(__clang__)
  out["compiler"] = "clang " __clang_version__;
#elif defined(__GNUC__)
  out["compiler"] = "gcc " __VERSION__;
#else
  out["compiler"] = "unknown";
#endif
  out["cxx_standard"] = std::to_string(__cplusplus);
  out["nlohmann_json"] = std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                         std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                         std::to_string(NLOHMANN_JSON_VERSION_PATCH);
  out["openssl"] = OPENSSL_VERSION_TEXT;
  out["rng"] = "mt19937_64 + splitmix64 stream split";
  return out;
}

json to_json(const RunManifest& manifest) {
  return {{"command_line", manifest.command_line},
          {"seed", manifest.seed},
          {"versions", manifest.versions},
          {"digests", manifest.digests},
          {"wall_seconds", manifest.wall_seconds},
          {"outcomes", manifest.outcomes}};
}

json to_json(const CriterionResult& result) {
  return {{"id", result.id},
          {"title", result.title},
          {"passed", result.passed},
          {"detail", result.detail},
          {"limit_seconds", result.limit_seconds},
          {"data", result.data}};
}

std::string acceptance_markdown(const std::vector<CriterionResult>& results, const RunManifest& manifest) {
  std::ostringstream md;
  md << "# Acceptance report\n\n";
  md << "Seed: `" << manifest.seed << "`\n\n";
  md << "| # | Criterion | Result | Limit | Detail |\n";
  md << "|---|-----------|--------|-------|--------|\n";
  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.passed ? 1 : 0;
    md << "| " << r.id << " | " << r.title << " | " << (r.passed ? "PASS" : "FAIL") << " | "
       << (r.limit_seconds > 0 ? std::to_string(static_cast<int>(r.limit_seconds)) + " s" : "none") << " | "
       << r.detail << " |\n";
  }
  md << "\n" << passed << " of " << results.size() << " criteria passed.\n\n";
  md << "## Run\n\n";
  md << "- command: `" << manifest.command_line << "`\n";
  md << "- wall time: " << manifest.wall_seconds << " s\n";
  for (const auto& [name, version] : manifest.versions) md << "- " << name << ": " << version << "\n";
  for (const auto& [name, digest] : manifest.digests) md << "- sha256(" << name << "): `" << digest << "`\n";
  md << "\n### Timings\n\n";
  for (const auto& r : results) md << "- criterion " << r.id << ": " << r.seconds << " s\n";
  return md.str();
}

json acceptance_json(const std::vector<CriterionResult>& results, const RunManifest& manifest) {
  json criteria = json::array();
  json timings = json::object();
  for (const auto& r : results) {
    criteria.push_back(to_json(r));
    timings[std::to_string(r.id)] = r.seconds;
  }
  json m = to_json(manifest);
  m["timings"] = std::move(timings);
  return {{"criteria", std::move(criteria)}, {"manifest", std::move(m)}};
}

}  // namespace normcov
