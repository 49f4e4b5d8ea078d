#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "normcov/clique.hpp"
#include "normcov/constructions.hpp"
#include "normcov/cover.hpp"
#include "normcov/graph.hpp"
#include "normcov/red_blue.hpp"
#include "normcov/reduction.hpp"
#include "normcov/search.hpp"

namespace normcov {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// graph6

/// Parses one graph6 string (an optional ">>graph6<<" header and trailing
/// newline are accepted). Throws ParseError with the offending byte offset.
Graph parse_graph6(std::string_view text);

std::string to_graph6(const Graph& g);

/// One graph per nonempty line. Offsets in errors are relative to `text`.
std::vector<Graph> parse_graph6_catalog(std::string_view text);

// ---------------------------------------------------------------------------
// JSON documents

/// Parses JSON text; syntax errors become ParseError with a byte offset.
json parse_json(std::string_view text);

/// Compact single-line serialization with a trailing newline. Object keys
/// are sorted, so equal values give identical bytes.
std::string dump_json(const json& doc);

json to_json(const Graph& g);  // {"n": int, "edges": [[u,v],...]}
json to_json(const RedBlueGraph& h);  // {"n": int, "blue": [[u,v],...], "red": [[u,v],...]}
json to_json(const Cover& cover);  // {"cliques": [[...]], "stables": [[...]]}
json to_json(const CoverReport& report);
json to_json(const LabeledRB& family);
json to_json(const NormalInstance& instance);
json to_json(const MultiH& mh);
json to_json(const ReductionStep& step);
json to_json(const LevelRecord& level);
json to_json(const MattReport& report);
json to_json(const CliqueResult& result);
json to_json(const CoverSearchResult& result);
json to_json(const NSmallResult& result);
json to_json(const OptimalnoReport& report);
json to_json(const AlphaOmegaReport& report);
json to_json(const MnozicaReport& report);

/// These throw InputError naming the offending JSON path.
Graph graph_from_json(const json& doc);
RedBlueGraph rb_from_json(const json& doc);
Cover cover_from_json(const json& doc);
MultiH multih_from_json(const json& doc);  // {"n", "edges", "multiplicity": [m per edge]}

/// Levels and steps in pipeline order, one JSON object per line; every
/// object carries "type": "level" or "step".
std::string trace_to_jsonl(const ReductionTrace& trace);

// ---------------------------------------------------------------------------
// Files

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

/// A plain graph from graph6 text or a {"n", "edges"} JSON document.
Graph load_graph_text(std::string_view text);

/// SHA-256 of the bytes, as lowercase hex.
std::string sha256_hex(std::string_view bytes);

}  // namespace normcov
