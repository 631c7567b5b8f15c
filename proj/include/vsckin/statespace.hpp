#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vsckin/eigenstructure.hpp"
#include "vsckin/network.hpp"

namespace vsckin {

/// |config; m> with at most one cavity-vibrational excitation.
struct CompositeState {
  ElectronicConfig config{};
  Occupation m{};
  double energy = 0.0;  ///< cm^-1
  std::size_t index = 0;

  /// Excited mode index, or -1 for the cavity-vibrational ground state.
  int excited_mode() const;
  /// Number of molecules of `species` in this configuration (0, 1 or 2).
  int count(std::size_t species) const;
};

/// Ordered state list. Ordering is lexicographic in (species of molecule 1,
/// species of molecule 2) by declaration order, then by excitation:
/// ground, mode 0, mode 1, mode 2. This order is part of the CSV contract.
class StateSpace {
 public:
  StateSpace(ReactionNetwork network, ModeBasis basis, std::vector<CompositeState> states);

  const ReactionNetwork& network() const { return network_; }
  const ModeBasis& basis() const { return basis_; }
  BasisKind kind() const { return basis_.kind; }
  const std::vector<CompositeState>& states() const { return states_; }
  std::size_t size() const { return states_.size(); }
  const CompositeState& operator[](std::size_t i) const { return states_[i]; }

  /// Index of |config; ground or single excitation of mode `excited_mode`>.
  std::size_t index_of(const ElectronicConfig& config, int excited_mode) const;

  /// Display label such as "A,B;+" or "A,A;0".
  std::string label(std::size_t i) const;

 private:
  ReactionNetwork network_;
  ModeBasis basis_;
  std::vector<CompositeState> states_;
};

/// States per electronic configuration under the truncation.
inline constexpr std::size_t kStatesPerConfig = kModeCount + 1;

/// Enumerate every composite state in the given basis. Energies come from
/// composite_energy_vsc (VSC basis) or composite_energy_bare (bare basis).
StateSpace enumerate_states(const ReactionNetwork& network, const ModeBasis& basis,
                            const CavitySpec& cavity);

/// Convenience overload that builds the basis of the requested kind.
StateSpace enumerate_states(const ReactionNetwork& network, BasisKind kind,
                            const CavitySpec& cavity);

/// Thermal distribution over the states whose configuration is
/// (reactant, reactant), normalized to 1; zero elsewhere.
std::vector<double> initial_distribution(const StateSpace& space,
                                         const std::string& reactant_label,
                                         double temperature_k);

}  // namespace vsckin
