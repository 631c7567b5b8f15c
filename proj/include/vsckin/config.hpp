#pragma once

// Scenario configuration: JSON ingestion, defaults and canonical
// serialization.
//
// Schema (energies in `energy_unit`, either "cm-1" or "hbar_omega_v";
// omega_v itself is always cm^-1; rates are ps^-1):
//
//   {
//     "name": "reaction1",                         optional
//     "energy_unit": "hbar_omega_v",               default "cm-1"
//     "omega_v": 2000,                             default 2000
//     "species": [{"label": "A", "energy": 0, "displacement": 0}, ...],
//     "couplings": [{"between": ["A", "B"], "J": 0.01, "lambda_s": 0.08}],
//     "reactant": "A",                             default: first species
//     "cavity": {"omega_c": ..., "g": ..., "kappa": 1},
//     "bath": {"gamma": 0.01, "eta": 0.001, "omega_cut": ..., "temperature": 298},
//     "regime": "vsc",                             bare | weak | vsc
//     "grid": {"spacing": "log", "t_start": 0.1, "t_end": 50000, "points": 400},
//     "method": "pade"                             pade | uniformized
//   }
//
// Omitted cavity fields default to omega_c = omega_v, g = 0.03 omega_v / sqrt(2),
// kappa = 1; omitted bath fields to gamma = 0.01, eta = 0.001,
// omega_cut = 0.1 omega_v, T = 298 K. Unknown keys are rejected.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "vsckin/eigenstructure.hpp"
#include "vsckin/network.hpp"
#include "vsckin/propagator.hpp"
#include "vsckin/rates.hpp"

namespace vsckin {

enum class EnergyUnit { kWavenumber, kHbarOmegaV };

const char* to_string(EnergyUnit unit);
EnergyUnit parse_energy_unit(const std::string& text);

const char* to_string(PropagationMethod method);
PropagationMethod parse_method(const std::string& text);

struct GridSpec {
  GridSpacing spacing = GridSpacing::kLog;
  double t_start = 0.1;
  double t_end = 5.0e4;
  std::size_t points = 400;
  std::vector<double> custom;  ///< used when spacing is kCustom

  TimeGrid build() const;
};

inline constexpr double kDefaultOmegaV = 2000.0;
inline constexpr double kDefaultTemperature = 298.0;
inline constexpr double kDefaultGamma = 0.01;
inline constexpr double kDefaultKappa = 1.0;
inline constexpr double kDefaultEta = 0.001;
inline constexpr double kDefaultCutoffFraction = 0.1;
inline constexpr double kDefaultRabiFraction = 0.03;  ///< g sqrt(N) / omega_v

/// Fully resolved scenario. All energies are stored in cm^-1; `energy_unit`
/// only records how the source file expressed them.
struct ScenarioConfig {
  std::string name;
  EnergyUnit energy_unit = EnergyUnit::kWavenumber;
  ReactionNetwork network;
  std::string reactant;
  CavitySpec cavity;
  BathSpec bath;
  RegimeKind regime = RegimeKind::kVsc;
  GridSpec grid;
  PropagationMethod method = PropagationMethod::kPade;

  /// Throws ValidationError naming the first violated invariant.
  void validate() const;
  RegimeSpec regime_spec() const { return make_regime(regime, cavity.g); }
};

/// Parses and validates a config document. Throws ValidationError.
ScenarioConfig config_from_json(const nlohmann::ordered_json& doc);

/// Parses config text; syntax errors are reported with line and column.
ScenarioConfig parse_config(const std::string& text);

/// Reads a config file. Throws IoError if unreadable.
ScenarioConfig load_config(const std::filesystem::path& path);

/// Canonical form (cm^-1, every effective field present, fixed key order).
/// config_from_json(config_to_json(c)) reproduces c.
nlohmann::ordered_json config_to_json(const ScenarioConfig& config);

/// FNV-1a 64-bit hash of a byte string.
std::uint64_t fnv1a64(std::string_view bytes);

/// 16 hex digits of fnv1a64 over the canonical JSON dump.
std::string config_fingerprint(const ScenarioConfig& config);

}  // namespace vsckin
