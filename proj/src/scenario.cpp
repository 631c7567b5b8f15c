#include "vsckin/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <exception>
#include <optional>
#include <thread>

#include "vsckin/error.hpp"

namespace vsckin {

ScenarioModel build_model(const ScenarioConfig& config) {
  config.validate();
  const RegimeSpec regime = config.regime_spec();
  const BasisKind kind = regime.kind == RegimeKind::kVsc ? BasisKind::kVsc : BasisKind::kBare;
  CavitySpec cavity = config.cavity;
  cavity.g = regime.g_effective;
  ScenarioModel model;
  model.space = std::make_shared<const StateSpace>(enumerate_states(config.network, kind, cavity));
  model.rates = assemble_rate_matrix(*model.space, cavity, config.bath, regime);
  model.initial = initial_distribution(*model.space, config.reactant, config.bath.temperature);
  return model;
}

ScenarioResult run_scenario(const ScenarioConfig& config) {
  ScenarioModel model = build_model(config);
  ScenarioResult r;
  r.config = config;
  r.regime = config.regime_spec();
  r.trajectory = make_trajectory(*model.space, model.rates, model.initial, config.grid.build(),
                                 config.method);
  r.space = std::move(model.space);
  r.rates = std::move(model.rates);
  r.initial = std::move(model.initial);
  return r;
}

std::vector<ScenarioResult> run_comparison(const ScenarioConfig& config,
                                           const std::vector<RegimeKind>& regimes) {
  if (regimes.empty()) throw ValidationError("compare: the regime list is empty");
  for (std::size_t i = 0; i < regimes.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (regimes[i] == regimes[j]) {
        throw ValidationError(std::string("compare: regime '") + to_string(regimes[i]) +
                              "' is listed twice");
      }
    }
  }
  std::vector<ScenarioResult> out;
  for (RegimeKind kind : regimes) {
    ScenarioConfig c = config;
    c.regime = kind;
    out.push_back(run_scenario(c));
    if (regimes.size() > 1) out.back().tag = to_string(kind);
  }
  return out;
}

const char* to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::kKappa:
      return "kappa";
    case SweepParameter::kEta:
      return "eta";
    case SweepParameter::kGamma:
      return "gamma";
    case SweepParameter::kG:
      return "g";
  }
  return "?";
}

SweepParameter parse_sweep_parameter(const std::string& text) {
  if (text == "kappa") return SweepParameter::kKappa;
  if (text == "eta") return SweepParameter::kEta;
  if (text == "gamma") return SweepParameter::kGamma;
  if (text == "g") return SweepParameter::kG;
  throw ValidationError("sweep parameter must be kappa, eta, gamma or g, got '" + text + "'");
}

ScenarioConfig apply_sweep_value(const ScenarioConfig& base, SweepParameter p, double value) {
  ScenarioConfig c = base;
  switch (p) {
    case SweepParameter::kKappa:
      c.cavity.kappa = value;
      break;
    case SweepParameter::kEta:
      c.bath.eta = value;
      break;
    case SweepParameter::kGamma:
      c.bath.gamma = value;
      break;
    case SweepParameter::kG:
      c.cavity.g = value;
      break;
  }
  c.validate();
  return c;
}

std::vector<ScenarioResult> run_sweep(const SweepSpec& sweep, unsigned threads) {
  if (sweep.values.empty()) throw ValidationError("sweep: the value list is empty");
  std::vector<ScenarioConfig> configs;
  for (double v : sweep.values) configs.push_back(apply_sweep_value(sweep.base, sweep.parameter, v));

  const std::size_t n = configs.size();
  std::vector<std::optional<ScenarioResult>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  unsigned workers = threads != 0 ? threads : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < n; i += workers) {
          try {
            slots[i] = run_scenario(configs[i]);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  std::vector<ScenarioResult> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
    out.back().tag = std::string(to_string(sweep.parameter)) + "=" + format_double(sweep.values[i]);
  }
  return out;
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace vsckin
