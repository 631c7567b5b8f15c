#include "vsckin/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <string_view>

#include "vsckin/error.hpp"

namespace vsckin {
namespace {

using Json = nlohmann::ordered_json;

void require_keys(const Json& obj, std::string_view where,
                  std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw ValidationError(std::string(where) + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw ValidationError(std::string(where) + ": unknown key '" + key + "'");
  }
}

double number(const Json& obj, const char* key, std::string_view where) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw ValidationError(std::string(where) + "." + key + ": required field is missing");
  }
  if (!it->is_number()) throw ValidationError(std::string(where) + "." + key + ": expected a number");
  const double v = it->get<double>();
  if (!std::isfinite(v)) throw ValidationError(std::string(where) + "." + key + ": not finite");
  return v;
}

double number_or(const Json& obj, const char* key, std::string_view where, double fallback) {
  return obj.contains(key) ? number(obj, key, where) : fallback;
}

std::string text(const Json& obj, const char* key, std::string_view where) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw ValidationError(std::string(where) + "." + key + ": expected a string");
  }
  return it->get<std::string>();
}

GridSpacing parse_spacing(const std::string& s) {
  if (s == "log") return GridSpacing::kLog;
  if (s == "linear") return GridSpacing::kLinear;
  if (s == "custom") return GridSpacing::kCustom;
  throw ValidationError("grid.spacing: expected log, linear or custom, got '" + s + "'");
}

GridSpec parse_grid(const Json& g) {
  require_keys(g, "grid", {"spacing", "t_start", "t_end", "points", "times"});
  GridSpec spec;
  if (g.contains("spacing")) spec.spacing = parse_spacing(text(g, "spacing", "grid"));
  if (spec.spacing == GridSpacing::kCustom) {
    if (!g.contains("times") || !g["times"].is_array()) {
      throw ValidationError("grid.times: custom spacing needs a list of times");
    }
    for (const auto& t : g["times"]) {
      if (!t.is_number()) throw ValidationError("grid.times: expected numbers");
      spec.custom.push_back(t.get<double>());
    }
    return spec;
  }
  if (g.contains("times")) throw ValidationError("grid.times: only allowed with custom spacing");
  spec.t_start = number_or(g, "t_start", "grid", spec.t_start);
  spec.t_end = number_or(g, "t_end", "grid", spec.t_end);
  if (g.contains("points")) {
    if (!g["points"].is_number_integer() || g["points"].get<long long>() < 2) {
      throw ValidationError("grid.points: expected an integer >= 2");
    }
    spec.points = g["points"].get<std::size_t>();
  }
  return spec;
}

}  // namespace

const char* to_string(EnergyUnit unit) {
  return unit == EnergyUnit::kWavenumber ? "cm-1" : "hbar_omega_v";
}

EnergyUnit parse_energy_unit(const std::string& s) {
  if (s == "cm-1") return EnergyUnit::kWavenumber;
  if (s == "hbar_omega_v") return EnergyUnit::kHbarOmegaV;
  throw ValidationError("energy_unit: expected cm-1 or hbar_omega_v, got '" + s + "'");
}

const char* to_string(PropagationMethod method) {
  return method == PropagationMethod::kPade ? "pade" : "uniformized";
}

PropagationMethod parse_method(const std::string& s) {
  if (s == "pade") return PropagationMethod::kPade;
  if (s == "uniformized") return PropagationMethod::kUniformized;
  throw ValidationError("method: expected pade or uniformized, got '" + s + "'");
}

TimeGrid GridSpec::build() const {
  switch (spacing) {
    case GridSpacing::kLog:
      return TimeGrid::logarithmic(t_start, t_end, points);
    case GridSpacing::kLinear:
      return TimeGrid::linear(t_start, t_end, points);
    case GridSpacing::kCustom:
      return TimeGrid(custom, GridSpacing::kCustom);
  }
  throw ValidationError("grid: unknown spacing");
}

void ScenarioConfig::validate() const {
  if (network.species_count() == 0) throw ValidationError("species: at least one is required");
  network.index_of(reactant);
  cavity.validate();
  bath.validate();
  grid.build();
}

ScenarioConfig config_from_json(const Json& doc) {
  require_keys(doc, "config",
               {"name", "energy_unit", "omega_v", "species", "couplings", "reactant", "cavity",
                "bath", "regime", "grid", "method"});
  ScenarioConfig c;
  if (doc.contains("name")) c.name = text(doc, "name", "config");
  if (doc.contains("energy_unit")) c.energy_unit = parse_energy_unit(text(doc, "energy_unit", "config"));
  const double omega_v = number_or(doc, "omega_v", "config", kDefaultOmegaV);
  if (!(omega_v > 0.0)) throw ValidationError("omega_v: must be > 0");
  const double scale = c.energy_unit == EnergyUnit::kHbarOmegaV ? omega_v : 1.0;

  if (!doc.contains("species") || !doc["species"].is_array()) {
    throw ValidationError("species: expected a list");
  }
  std::vector<SpeciesSpec> species;
  for (const auto& s : doc["species"]) {
    require_keys(s, "species[]", {"label", "energy", "displacement"});
    species.push_back({text(s, "label", "species[]"), number(s, "energy", "species[]") * scale,
                       number_or(s, "displacement", "species[]", 0.0)});
  }
  std::vector<CouplingSpec> couplings;
  if (doc.contains("couplings")) {
    if (!doc["couplings"].is_array()) throw ValidationError("couplings: expected a list");
    for (const auto& cp : doc["couplings"]) {
      require_keys(cp, "couplings[]", {"between", "J", "lambda_s"});
      const auto& pair = cp.contains("between") ? cp["between"] : Json();
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
        throw ValidationError("couplings[].between: expected two species labels");
      }
      couplings.push_back({pair[0].get<std::string>(), pair[1].get<std::string>(),
                           number(cp, "J", "couplings[]") * scale,
                           number(cp, "lambda_s", "couplings[]") * scale});
    }
  }
  c.network = ReactionNetwork(omega_v, std::move(species), std::move(couplings));
  c.reactant = doc.contains("reactant") ? text(doc, "reactant", "config")
                                        : c.network.species(0).label;

  const Json cavity = doc.contains("cavity") ? doc["cavity"] : Json::object();
  require_keys(cavity, "cavity", {"omega_c", "g", "kappa"});
  c.cavity.omega_c = cavity.contains("omega_c") ? number(cavity, "omega_c", "cavity") * scale : omega_v;
  c.cavity.g = cavity.contains("g")
                   ? number(cavity, "g", "cavity") * scale
                   : kDefaultRabiFraction * omega_v / std::sqrt(static_cast<double>(kMoleculeCount));
  c.cavity.kappa = number_or(cavity, "kappa", "cavity", kDefaultKappa);
  c.cavity.n_molecules = static_cast<int>(kMoleculeCount);

  const Json bath = doc.contains("bath") ? doc["bath"] : Json::object();
  require_keys(bath, "bath", {"gamma", "eta", "omega_cut", "temperature"});
  c.bath.gamma = number_or(bath, "gamma", "bath", kDefaultGamma);
  c.bath.eta = number_or(bath, "eta", "bath", kDefaultEta);
  c.bath.omega_cut = bath.contains("omega_cut") ? number(bath, "omega_cut", "bath") * scale
                                                : kDefaultCutoffFraction * omega_v;
  c.bath.temperature = number_or(bath, "temperature", "bath", kDefaultTemperature);

  if (doc.contains("regime")) c.regime = parse_regime(text(doc, "regime", "config"));
  if (doc.contains("grid")) c.grid = parse_grid(doc["grid"]);
  if (doc.contains("method")) c.method = parse_method(text(doc, "method", "config"));

  c.validate();
  return c;
}

ScenarioConfig parse_config(const std::string& source) {
  Json doc;
  try {
    doc = Json::parse(source);
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into line/column.
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, source.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (source[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ValidationError("config parse error at line " + std::to_string(line) + ", column " +
                          std::to_string(col) + ": " + e.what());
  }
  return config_from_json(doc);
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

Json config_to_json(const ScenarioConfig& c) {
  Json doc;
  doc["name"] = c.name;
  doc["energy_unit"] = "cm-1";
  doc["omega_v"] = c.network.omega_v();
  doc["species"] = Json::array();
  for (const auto& s : c.network.species()) {
    doc["species"].push_back({{"label", s.label}, {"energy", s.energy}, {"displacement", s.displacement}});
  }
  doc["couplings"] = Json::array();
  for (const auto& cp : c.network.couplings()) {
    doc["couplings"].push_back(
        {{"between", {cp.first, cp.second}}, {"J", cp.J}, {"lambda_s", cp.lambda_s}});
  }
  doc["reactant"] = c.reactant;
  doc["cavity"] = {{"omega_c", c.cavity.omega_c}, {"g", c.cavity.g}, {"kappa", c.cavity.kappa}};
  doc["bath"] = {{"gamma", c.bath.gamma},
                 {"eta", c.bath.eta},
                 {"omega_cut", c.bath.omega_cut},
                 {"temperature", c.bath.temperature}};
  doc["regime"] = to_string(c.regime);
  Json grid;
  grid["spacing"] = to_string(c.grid.spacing);
  if (c.grid.spacing == GridSpacing::kCustom) {
    grid["times"] = c.grid.custom;
  } else {
    grid["t_start"] = c.grid.t_start;
    grid["t_end"] = c.grid.t_end;
    grid["points"] = c.grid.points;
  }
  doc["grid"] = grid;
  doc["method"] = to_string(c.method);
  return doc;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string config_fingerprint(const ScenarioConfig& config) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::uint64_t h = fnv1a64(config_to_json(config).dump());
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = kHex[h & 0xF];
  return out;
}

}  // namespace vsckin
