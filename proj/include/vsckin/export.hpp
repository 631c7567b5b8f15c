#pragma once

// Deterministic CSV and JSON export of scenario results.
//
// CSV layout:
//   # fingerprint=<16 hex digits> runs=<tags or "single">
//   time_ps,<prefix>p[<state>]...,<prefix>N[<species>]...,<prefix>frac[<species>]...
// where <prefix> is "<tag>/" for multi-run exports. State populations within
// -1e-12 of zero are written as 0; internal values are never modified.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "vsckin/scenario.hpp"

namespace vsckin {

enum class ExportFormat { kCsv, kJson };

const char* to_string(ExportFormat format);
ExportFormat parse_export_format(const std::string& text);

/// Fingerprint of a result set (hash over every run's canonical config).
std::string results_fingerprint(const std::vector<ScenarioResult>& results);

/// Throws ValidationError if the runs do not share a time grid.
std::string to_csv(const std::vector<ScenarioResult>& results);

/// Full result tree with effective configs, basis, state energies, rates
/// metadata and physical constants.
nlohmann::ordered_json to_json(const std::vector<ScenarioResult>& results);

std::string render(const std::vector<ScenarioResult>& results, ExportFormat format);

/// Writes bytes to path (truncating). Throws IoError naming the path.
void write_file(const std::filesystem::path& path, const std::string& content);

/// Effective configs recorded in a JSON export, in run order.
std::vector<ScenarioConfig> configs_from_export(const nlohmann::ordered_json& doc);

}  // namespace vsckin
