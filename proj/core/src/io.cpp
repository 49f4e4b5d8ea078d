#include "normcov/io.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "normcov/errors.hpp"

namespace normcov {

// ---------------------------------------------------------------------------
// graph6

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

bool is_space(char ch) { return ch == '\n' || ch == '\r' || ch == ' ' || ch == '\t'; }

// `base` is added to every reported offset.
Graph parse_graph6_at(std::string_view text, std::size_t base) {
  std::size_t pos = 0;
  if (text.starts_with(kGraph6Header)) pos = kGraph6Header.size();
  std::size_t end = text.size();
  while (end > pos && is_space(text[end - 1])) --end;

  auto byte = [&](std::size_t at) -> std::uint32_t {
    if (at >= end) throw ParseError("graph6: unexpected end of input", base + at);
    const auto ch = static_cast<unsigned char>(text[at]);
    if (ch < 63 || ch > 126) throw ParseError("graph6: byte outside 63..126", base + at);
    return ch - 63U;
  };

  std::uint64_t n = 0;
  if (pos >= end) throw ParseError("graph6: empty input", base + pos);
  if (byte(pos) < 63) {
    n = byte(pos);
    pos += 1;
  } else if (pos + 1 < end && byte(pos + 1) == 63) {
    for (std::size_t i = 0; i < 6; ++i) n = (n << 6) | byte(pos + 2 + i);
    pos += 8;
  } else {
    for (std::size_t i = 0; i < 3; ++i) n = (n << 6) | byte(pos + 1 + i);
    pos += 4;
  }
  if (n > (std::uint64_t{1} << 20)) throw ParseError("graph6: order too large", base);

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t chars = (bits + 5) / 6;
  if (end - pos != chars) {
    throw ParseError("graph6: expected " + std::to_string(chars) + " adjacency bytes, found " +
                         std::to_string(end - pos),
                     base + std::min(end, pos + chars));
  }
  Graph g(static_cast<std::size_t>(n));
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::uint32_t word = byte(pos + k / 6);
      if ((word >> (5 - k % 6)) & 1U) g.add_edge(i, j);
    }
  }
  for (; k < chars * 6; ++k) {
    if ((byte(pos + k / 6) >> (5 - k % 6)) & 1U) throw ParseError("graph6: nonzero padding bit", base + pos + k / 6);
  }
  return g;
}

}  // namespace

Graph parse_graph6(std::string_view text) { return parse_graph6_at(text, 0); }

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
  }
  std::uint32_t word = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + 63));
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + 63));
  return out;
}

std::vector<Graph> parse_graph6_catalog(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view line = text.substr(start, stop - start);
    while (!line.empty() && is_space(line.back())) line.remove_suffix(1);
    if (!line.empty() && line != kGraph6Header) out.push_back(parse_graph6_at(line, start));
    start = stop + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports the 1-based index of the last byte read.
    throw ParseError(std::string("JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
}

std::string dump_json(const json& doc) { return doc.dump() + "\n"; }

namespace {

json edge_list(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& [u, v] : edges) out.push_back({u, v});
  return out;
}

json set_list(const std::vector<VertexList>& sets) {
  json out = json::array();
  for (const auto& set : sets) out.push_back(set);
  return out;
}

const json& field(const json& doc, const char* key, const std::string& path) {
  if (!doc.is_object()) throw InputError(path + ": expected a JSON object");
  const auto it = doc.find(key);
  if (it == doc.end()) throw InputError(path + "." + key + ": missing");
  return *it;
}

std::uint64_t as_count(const json& value, const std::string& path) {
  if (!value.is_number_integer() || (value.is_number_integer() && value.get<std::int64_t>() < 0)) {
    throw InputError(path + ": expected a non-negative integer");
  }
  return value.get<std::uint64_t>();
}

Vertex as_vertex(const json& value, const std::string& path) {
  const auto v = as_count(value, path);
  if (v > 0xFFFFFFFFULL) throw InputError(path + ": vertex index too large");
  return static_cast<Vertex>(v);
}

std::vector<Edge> edges_from(const json& value, const std::string& path, std::size_t n) {
  if (!value.is_array()) throw InputError(path + ": expected an array of [u, v] pairs");
  std::vector<Edge> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const std::string at = path + "[" + std::to_string(i) + "]";
    const json& pair = value[i];
    if (!pair.is_array() || pair.size() != 2) throw InputError(at + ": expected [u, v]");
    const Vertex u = as_vertex(pair[0], at + "[0]");
    const Vertex v = as_vertex(pair[1], at + "[1]");
    if (u == v) throw InputError(at + ": self-loop");
    if (u >= n || v >= n) throw InputError(at + ": vertex out of range for n=" + std::to_string(n));
    out.push_back(make_edge(u, v));
  }
  return out;
}

std::vector<VertexList> sets_from(const json& value, const std::string& path) {
  if (!value.is_array()) throw InputError(path + ": expected an array of vertex arrays");
  std::vector<VertexList> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const std::string at = path + "[" + std::to_string(i) + "]";
    if (!value[i].is_array()) throw InputError(at + ": expected an array of vertices");
    VertexList set;
    for (std::size_t k = 0; k < value[i].size(); ++k) set.push_back(as_vertex(value[i][k], at + "[" + std::to_string(k) + "]"));
    out.push_back(std::move(set));
  }
  return out;
}

std::size_t order_from(const json& doc, const std::string& path) {
  const auto n = as_count(field(doc, "n", path), path + ".n");
  if (n > (std::uint64_t{1} << 24)) throw InputError(path + ".n: order too large");
  return static_cast<std::size_t>(n);
}

}  // namespace

json to_json(const Graph& g) { return {{"n", g.order()}, {"edges", edge_list(g.edges())}}; }

json to_json(const RedBlueGraph& h) {
  return {{"n", h.order()}, {"blue", edge_list(h.blue_edges())}, {"red", edge_list(h.red_edges())}};
}

json to_json(const Cover& cover) { return {{"cliques", set_list(cover.cliques)}, {"stables", set_list(cover.stables)}}; }

json to_json(const CoverReport& report) {
  json out{{"cond_clique_cover", report.cond_clique_cover},
           {"cond_stable_cover", report.cond_stable_cover},
           {"cond_intersection", report.cond_intersection},
           {"max_clique_size", report.max_clique_size},
           {"max_stable_size", report.max_stable_size},
           {"failure_witness", nullptr}};
  if (report.failure_witness) {
    out["failure_witness"] = {{"kind", to_string(report.failure_witness->kind)},
                              {"indices", report.failure_witness->indices}};
  }
  return out;
}

json to_json(const LabeledRB& family) {
  return {{"graph", to_json(family.rb)},
          {"cover", to_json(family.cover)},
          {"labels", family.labels},
          {"c", family.c},
          {"s", family.s}};
}

json to_json(const NormalInstance& instance) {
  return {{"graph", to_json(instance.graph)}, {"cover", to_json(instance.cover)}};
}

json to_json(const MultiH& mh) {
  json out = to_json(mh.h);
  json mult = json::array();
  for (const auto& e : mh.h.edges()) mult.push_back(mh.multiplicity.at(e));
  out["multiplicity"] = std::move(mult);
  return out;
}

json to_json(const ReductionStep& step) {
  return {{"type", "step"},
          {"level", step.level},
          {"side", to_string(step.side)},
          {"element", step.element},
          {"vertex", step.vertex},
          {"op", step.contracted() ? "contract" : "delete"},
          {"partner", step.partner ? json(*step.partner) : json(nullptr)},
          {"n_after", step.n_after},
          {"cliques_after", step.cliques_after},
          {"stables_after", step.stables_after}};
}

json to_json(const LevelRecord& level) {
  return {{"type", "level"},
          {"level", level.level},
          {"c", level.c},
          {"s", level.s},
          {"n", level.n},
          {"cliques", level.cliques},
          {"stables", level.stables},
          {"cover_ok", level.cover_ok},
          {"central_ok", level.central_ok},
          {"bound_ok", level.bound_ok},
          {"halving_ok", level.halving_ok},
          {"terminal", level.terminal},
          {"reduced", level.reduced ? json(to_string(*level.reduced)) : json(nullptr)}};
}

json to_json(const MattReport& report) {
  return {{"t", report.t},
          {"n", report.n},
          {"sum_all_is_J", report.sum_all_is_J},
          {"sum_generators_is_I", report.sum_generators_is_I},
          {"sum_rest_is_J_minus_I", report.sum_rest_is_J_minus_I},
          {"n_at_least_2t", report.n_at_least_2t},
          {"ok", report.ok()}};
}

json to_json(const CliqueResult& result) {
  return {{"size", result.size}, {"exact", result.exact}, {"witness", result.witness}, {"nodes", result.nodes}};
}

json to_json(const CoverSearchResult& result) {
  return {{"status", to_string(result.status)},
          {"cover", result.cover ? to_json(*result.cover) : json(nullptr)},
          {"nodes", result.nodes}};
}

json to_json(const NSmallResult& result) {
  json out{{"n_max", result.n_max},
           {"graphs_seen", result.graphs_seen},
           {"graphs_tested", result.graphs_tested},
           {"complete", result.complete},
           {"witness", nullptr}};
  if (result.witness) {
    out["witness"] = to_json(*result.witness);
    out["witness"]["graph6"] = to_graph6(result.witness->graph);
  }
  return out;
}

json to_json(const OptimalnoReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) violations.push_back({{"set", v.set}, {"overlap", v.overlap}});
  return {{"c", report.c},
          {"sets_examined", report.sets_examined},
          {"nodes", report.nodes},
          {"violation_count", report.violation_count},
          {"violations", std::move(violations)},
          {"complete", report.complete},
          {"confirmed", report.confirmed()}};
}

json to_json(const AlphaOmegaReport& report) {
  json trials = json::array();
  for (const auto& t : report.trials) {
    trials.push_back({{"trial", t.trial},
                      {"seed", t.seed},
                      {"omega", t.omega},
                      {"alpha", t.alpha},
                      {"omega_exact", t.omega_exact},
                      {"alpha_exact", t.alpha_exact}});
  }
  return {{"c", report.c},
          {"n", report.n},
          {"seed", report.seed},
          {"probability", report.options.probability},
          {"node_budget", report.options.node_budget},
          {"trials", std::move(trials)},
          {"max_omega", report.max_omega},
          {"max_alpha", report.max_alpha},
          {"complete_trials", report.complete_trials},
          {"fraction_below_4c", report.fraction_below_4c}};
}

json to_json(const MnozicaReport& report) {
  return {{"c", report.c},
          {"n", report.n},
          {"subset_size", report.subset_size},
          {"samples", report.samples},
          {"seed", report.seed},
          {"total_pairs", report.total_pairs},
          {"min_non_blue", report.min_non_blue},
          {"min_non_red", report.min_non_red},
          {"mean_non_blue", report.mean_non_blue},
          {"mean_non_red", report.mean_non_red},
          {"quadratic_reference", report.reference}};
}

Graph graph_from_json(const json& doc) {
  const std::size_t n = order_from(doc, "$");
  const auto edges = edges_from(field(doc, "edges", "$"), "$.edges", n);
  return Graph::from_edges(n, edges);
}

RedBlueGraph rb_from_json(const json& doc) {
  const std::size_t n = order_from(doc, "$");
  const auto blue = edges_from(field(doc, "blue", "$"), "$.blue", n);
  const auto red = edges_from(field(doc, "red", "$"), "$.red", n);
  return RedBlueGraph::from_edges(n, blue, red);
}

Cover cover_from_json(const json& doc) {
  Cover cover;
  cover.cliques = sets_from(field(doc, "cliques", "$"), "$.cliques");
  cover.stables = sets_from(field(doc, "stables", "$"), "$.stables");
  return cover;
}

MultiH multih_from_json(const json& doc) {
  MultiH mh;
  const std::size_t n = order_from(doc, "$");
  const auto edges = edges_from(field(doc, "edges", "$"), "$.edges", n);
  mh.h = Graph::from_edges(n, edges);
  const json& mult = field(doc, "multiplicity", "$");
  if (!mult.is_array() || mult.size() != edges.size()) {
    throw InputError("$.multiplicity: expected one entry per edge");
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto m = as_count(mult[i], "$.multiplicity[" + std::to_string(i) + "]");
    if (m == 0 || m > 0xFFFFFFFFULL) throw InputError("$.multiplicity[" + std::to_string(i) + "]: must be positive");
    mh.multiplicity[edges[i]] = static_cast<std::uint32_t>(m);
  }
  mh.validate();
  return mh;
}

std::string trace_to_jsonl(const ReductionTrace& trace) {
  std::string out;
  std::size_t next_step = 0;
  for (const auto& level : trace.levels) {
    out += to_json(level).dump() + "\n";
    while (next_step < trace.steps.size() && trace.steps[next_step].level == level.level) {
      out += to_json(trace.steps[next_step++]).dump() + "\n";
    }
  }
  for (; next_step < trace.steps.size(); ++next_step) out += to_json(trace.steps[next_step]).dump() + "\n";
  for (const auto& v : trace.violations) out += json{{"type", "violation"}, {"message", v}}.dump() + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Files

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw InputError("write failed for " + path);
}

Graph load_graph_text(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && is_space(text[first])) ++first;
  if (first < text.size() && text[first] == '{') return graph_from_json(parse_json(text));
  return parse_graph6_at(text.substr(first), first);
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 computation failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return hex.str();
}

}  // namespace normcov
