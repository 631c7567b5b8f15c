#pragma once

// End-to-end scenario runs: state enumeration, rate assembly, thermal
// initial condition and propagation, plus regime comparisons and
// single-parameter sweeps.

#include <memory>
#include <string>
#include <vector>

#include "vsckin/config.hpp"
#include "vsckin/propagator.hpp"
#include "vsckin/rates.hpp"
#include "vsckin/statespace.hpp"

namespace vsckin {

struct ScenarioResult {
  std::string tag;  ///< column prefix in multi-run exports; empty for a single run
  ScenarioConfig config;
  RegimeSpec regime;
  std::shared_ptr<const StateSpace> space;
  RateMatrix rates;
  std::vector<double> initial;
  Trajectory trajectory;
};

/// Generator and state space for a config without propagating.
struct ScenarioModel {
  std::shared_ptr<const StateSpace> space;
  RateMatrix rates;
  std::vector<double> initial;
};

ScenarioModel build_model(const ScenarioConfig& config);

ScenarioResult run_scenario(const ScenarioConfig& config);

/// One run per regime on the config's grid, tagged by regime name. Throws
/// ValidationError on an empty or duplicated regime list.
std::vector<ScenarioResult> run_comparison(const ScenarioConfig& config,
                                           const std::vector<RegimeKind>& regimes);

enum class SweepParameter { kKappa, kEta, kGamma, kG };

const char* to_string(SweepParameter p);
SweepParameter parse_sweep_parameter(const std::string& text);

/// kappa and gamma in ps^-1, eta dimensionless, g in cm^-1.
struct SweepSpec {
  SweepParameter parameter = SweepParameter::kKappa;
  std::vector<double> values;
  ScenarioConfig base;
};

/// Base config with one parameter replaced and revalidated.
ScenarioConfig apply_sweep_value(const ScenarioConfig& base, SweepParameter p, double value);

/// One run per value, in value order, tagged "<param>=<value>". Scenarios
/// may be evaluated on up to `threads` workers (0 = hardware concurrency);
/// results do not depend on the thread count.
std::vector<ScenarioResult> run_sweep(const SweepSpec& sweep, unsigned threads = 0);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace vsckin
