#include "vsckin/export.hpp"

#include <cmath>
#include <fstream>

#include "vsckin/error.hpp"
#include "vsckin/units.hpp"

namespace vsckin {
namespace {

using Json = nlohmann::ordered_json;

constexpr double kClampBelow = 1e-12;

double reported(double v) { return (v < 0.0 && v > -kClampBelow) ? 0.0 : v; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void check_shared_grid(const std::vector<ScenarioResult>& results) {
  if (results.empty()) throw ValidationError("export: no results");
  for (const auto& r : results) {
    if (r.trajectory.grid.points() != results.front().trajectory.grid.points()) {
      throw ValidationError("export: runs do not share a time grid");
    }
  }
}

}  // namespace

const char* to_string(ExportFormat format) { return format == ExportFormat::kCsv ? "csv" : "json"; }

ExportFormat parse_export_format(const std::string& text) {
  if (text == "csv") return ExportFormat::kCsv;
  if (text == "json") return ExportFormat::kJson;
  throw ValidationError("format must be csv or json, got '" + text + "'");
}

std::string results_fingerprint(const std::vector<ScenarioResult>& results) {
  if (results.size() == 1) return config_fingerprint(results.front().config);
  std::string joined;
  for (const auto& r : results) {
    joined += r.tag;
    joined += '\n';
    joined += config_to_json(r.config).dump();
    joined += '\n';
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::uint64_t h = fnv1a64(joined);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = kHex[h & 0xF];
  return out;
}

std::string to_csv(const std::vector<ScenarioResult>& results) {
  check_shared_grid(results);
  std::string out = "# fingerprint=" + results_fingerprint(results) + " runs=";
  if (results.size() == 1 && results.front().tag.empty()) {
    out += "single";
  } else {
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (i > 0) out += ';';
      out += results[i].tag;
    }
  }
  out += "\ntime_ps";
  for (const auto& r : results) {
    const std::string prefix = r.tag.empty() ? "" : r.tag + "/";
    for (const auto& s : r.trajectory.state_labels) out += "," + csv_field(prefix + "p[" + s + "]");
    for (const auto& s : r.trajectory.species_labels) out += "," + csv_field(prefix + "N[" + s + "]");
    for (const auto& s : r.trajectory.species_labels) {
      out += "," + csv_field(prefix + "frac[" + s + "]");
    }
  }
  out += '\n';

  const auto& times = results.front().trajectory.grid.points();
  for (std::size_t t = 0; t < times.size(); ++t) {
    out += format_double(times[t]);
    for (const auto& r : results) {
      const auto& tr = r.trajectory;
      for (double v : tr.state_populations.row(t)) out += "," + format_double(reported(v));
      for (double v : tr.species_populations.row(t)) out += "," + format_double(reported(v));
      for (std::size_t s = 0; s < tr.species_labels.size(); ++s) {
        out += "," + format_double(reported(tr.fraction(t, s)));
      }
    }
    out += '\n';
  }
  return out;
}

Json to_json(const std::vector<ScenarioResult>& results) {
  check_shared_grid(results);
  Json doc;
  doc["format_version"] = 1;
  doc["fingerprint"] = results_fingerprint(results);
  doc["constants"] = {{"speed_of_light_cm_per_ps", units::kSpeedOfLight},
                      {"boltzmann_cm-1_per_K", units::kBoltzmann},
                      {"hbar_cm-1_ps", units::kHbar},
                      {"angular_per_wavenumber", units::kAngularPerWavenumber}};
  doc["time_ps"] = results.front().trajectory.grid.points();
  doc["runs"] = Json::array();
  for (const auto& r : results) {
    const auto& tr = r.trajectory;
    const auto& basis = r.space->basis();
    Json run;
    run["tag"] = r.tag;
    run["config"] = config_to_json(r.config);
    run["regime"] = {{"kind", to_string(r.regime.kind)}, {"g_effective", r.regime.g_effective}};
    Json modes = Json::array();
    for (std::size_t q = 0; q < kModeCount; ++q) {
      modes.push_back({{"label", std::string(basis.label(q))},
                       {"frequency", basis.frequencies[q]},
                       {"coefficients", basis.coefficients[q]}});
    }
    run["modes"] = modes;
    run["mixing_angle"] = basis.mixing_angle;
    Json states = Json::array();
    for (std::size_t i = 0; i < r.space->size(); ++i) {
      states.push_back({{"label", tr.state_labels[i]}, {"energy", (*r.space)[i].energy}});
    }
    run["states"] = states;
    run["species"] = tr.species_labels;
    run["max_column_sum"] = r.rates.max_column_sum();

    Json pops = Json::array();
    Json counts = Json::array();
    Json fracs = Json::array();
    for (std::size_t t = 0; t < tr.grid.size(); ++t) {
      Json p = Json::array();
      for (double v : tr.state_populations.row(t)) p.push_back(reported(v));
      pops.push_back(std::move(p));
      Json n = Json::array();
      Json f = Json::array();
      for (std::size_t s = 0; s < tr.species_labels.size(); ++s) {
        n.push_back(reported(tr.species_populations(t, s)));
        f.push_back(reported(tr.fraction(t, s)));
      }
      counts.push_back(std::move(n));
      fracs.push_back(std::move(f));
    }
    run["state_populations"] = std::move(pops);
    run["species_populations"] = std::move(counts);
    run["species_fractions"] = std::move(fracs);
    doc["runs"].push_back(std::move(run));
  }
  return doc;
}

std::string render(const std::vector<ScenarioResult>& results, ExportFormat format) {
  if (format == ExportFormat::kCsv) return to_csv(results);
  return to_json(results).dump(1) + "\n";
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open output file: " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw IoError("failed writing output file: " + path.string());
}

std::vector<ScenarioConfig> configs_from_export(const Json& doc) {
  if (!doc.is_object() || !doc.contains("runs") || !doc["runs"].is_array()) {
    throw ValidationError("export document: missing runs");
  }
  std::vector<ScenarioConfig> out;
  for (const auto& run : doc["runs"]) {
    if (!run.contains("config")) throw ValidationError("export document: run without config");
    out.push_back(config_from_json(run["config"]));
  }
  return out;
}

}  // namespace vsckin
