#include "vsckin/statespace.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "vsckin/error.hpp"
#include "vsckin/units.hpp"

namespace vsckin {

int CompositeState::excited_mode() const {
  for (std::size_t q = 0; q < kModeCount; ++q) {
    if (m[q] > 0) return static_cast<int>(q);
  }
  return -1;
}

int CompositeState::count(std::size_t species) const {
  int n = 0;
  for (auto s : config) n += (s == species) ? 1 : 0;
  return n;
}

StateSpace::StateSpace(ReactionNetwork network, ModeBasis basis,
                       std::vector<CompositeState> states)
    : network_(std::move(network)), basis_(basis), states_(std::move(states)) {}

std::size_t StateSpace::index_of(const ElectronicConfig& config, int excited_mode) const {
  const std::size_t s = network_.species_count();
  if (config[0] >= s || config[1] >= s || excited_mode < -1 ||
      excited_mode >= static_cast<int>(kModeCount)) {
    throw ValidationError("state lookup out of range");
  }
  return (config[0] * s + config[1]) * kStatesPerConfig +
         static_cast<std::size_t>(excited_mode + 1);
}

std::string StateSpace::label(std::size_t i) const {
  const auto& st = states_.at(i);
  std::string out = network_.species(st.config[0]).label;
  out += ',';
  out += network_.species(st.config[1]).label;
  out += ';';
  const int q = st.excited_mode();
  if (q < 0) {
    out += '0';
  } else {
    out += basis_.label(static_cast<std::size_t>(q));
  }
  return out;
}

StateSpace enumerate_states(const ReactionNetwork& network, const ModeBasis& basis,
                            const CavitySpec& cavity) {
  cavity.validate();
  const DisplacementTable table(basis, network);
  const std::size_t s = network.species_count();
  std::vector<CompositeState> states;
  states.reserve(s * s * kStatesPerConfig);
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = 0; b < s; ++b) {
      for (int q = -1; q < static_cast<int>(kModeCount); ++q) {
        CompositeState st;
        st.config = {a, b};
        if (q >= 0) st.m[static_cast<std::size_t>(q)] = 1;
        st.energy = basis.kind == BasisKind::kVsc
                        ? composite_energy_vsc(st.config, st.m, basis, table, network)
                        : composite_energy_bare(st.config, st.m, network, cavity);
        st.index = states.size();
        states.push_back(st);
      }
    }
  }
  return StateSpace(network, basis, std::move(states));
}

StateSpace enumerate_states(const ReactionNetwork& network, BasisKind kind,
                            const CavitySpec& cavity) {
  const ModeBasis basis = kind == BasisKind::kVsc ? build_mode_basis(cavity, network.omega_v())
                                                  : build_bare_basis(cavity, network.omega_v());
  return enumerate_states(network, basis, cavity);
}

std::vector<double> initial_distribution(const StateSpace& space,
                                         const std::string& reactant_label,
                                         double temperature_k) {
  const std::size_t reactant = space.network().index_of(reactant_label);
  const double kt = units::thermal_energy(temperature_k);
  std::vector<double> p(space.size(), 0.0);

  // Shift by the lowest reactant energy so the largest weight is exactly 1.
  double e_min = INFINITY;
  for (const auto& st : space.states()) {
    if (st.config[0] == reactant && st.config[1] == reactant) e_min = std::min(e_min, st.energy);
  }
  double total = 0.0;
  for (const auto& st : space.states()) {
    if (st.config[0] == reactant && st.config[1] == reactant) {
      p[st.index] = std::exp(-(st.energy - e_min) / kt);
      total += p[st.index];
    }
  }
  for (auto& v : p) v /= total;
  return p;
}

}  // namespace vsckin
