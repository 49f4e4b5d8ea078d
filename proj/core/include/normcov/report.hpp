#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace normcov {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;  // the check held and finished within the time limit
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // 0: no limit
  nlohmann::json data;       // numbers behind the verdict
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240607;
  /// Also run the exhaustive transversal check on F_5.
  bool optimalno_c5 = false;
  /// Criteria to run; empty means all.
  std::set<int> only;
  /// Sampling sizes for the reproducibility criterion.
  std::uint64_t mnozica_samples = 100000;
  std::uint64_t alpha_omega_node_budget = 20000;
  /// Called after each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

inline constexpr int kCriterionCount = 13;

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// Provenance for a run: how it was invoked and what it consumed/produced.
struct RunManifest {
  std::string command_line;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> versions;
  std::map<std::string, std::string> digests;  // name -> SHA-256 hex
  double wall_seconds = 0;
  std::map<std::string, std::string> outcomes;
};

/// Library, compiler and dependency versions.
std::map<std::string, std::string> build_versions();

nlohmann::json to_json(const RunManifest& manifest);
nlohmann::json to_json(const CriterionResult& result);

std::string acceptance_markdown(const std::vector<CriterionResult>& results, const RunManifest& manifest);
nlohmann::json acceptance_json(const std::vector<CriterionResult>& results, const RunManifest& manifest);

}  // namespace normcov
