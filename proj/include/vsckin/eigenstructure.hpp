#pragma once

// Cavity-vibrational eigenmodes for two molecules coupled to one cavity mode,
// the displacements each electronic configuration induces on those modes,
// and composite-state energies.
//
// Mode index conventions (q = 0, 1, 2):
//   VSC basis:  upper polariton "+", lower polariton "-", dark "d"
//   bare basis: cavity "c", vibration of molecule 1 "v1", of molecule 2 "v2"
// Coefficient columns i = 0, 1, 2 are the cavity mode and the two local
// vibrations.

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "vsckin/network.hpp"

namespace vsckin {

inline constexpr std::size_t kModeCount = 3;
inline constexpr std::size_t kMoleculeCount = 2;

using Occupation = std::array<int, kModeCount>;
/// Species index of molecule 1 and molecule 2.
using ElectronicConfig = std::array<std::size_t, kMoleculeCount>;

enum class BasisKind { kVsc, kBare };

struct CavitySpec {
  double omega_c = 0.0;  ///< cm^-1
  double g = 0.0;        ///< single-molecule coupling, cm^-1
  int n_molecules = 2;
  double kappa = 0.0;    ///< bare cavity decay, ps^-1

  /// Throws ValidationError unless omega_c > 0, g >= 0, kappa >= 0, N = 2.
  void validate() const;
};

struct ModeBasis {
  BasisKind kind = BasisKind::kVsc;
  double omega_v = 0.0;
  std::array<double, kModeCount> frequencies{};  ///< cm^-1
  /// coefficients[q][i]: weight of bare mode i in eigenmode q.
  std::array<std::array<double, kModeCount>, kModeCount> coefficients{};
  double mixing_angle = 0.0;  ///< theta, radians (0 for the bare basis)

  std::string_view label(std::size_t q) const;

  /// Same basis with the dark-mode vector negated. Both phase choices are
  /// valid eigenvectors of the degenerate dark subspace.
  ModeBasis with_dark_sign_flipped() const;
};

/// Polariton/dark eigenmodes of the cavity-vibration Hamiltonian.
ModeBasis build_mode_basis(const CavitySpec& cavity, double omega_v);

/// Local-mode basis: identity coefficients, frequencies {omega_c, omega_v, omega_v}.
ModeBasis build_bare_basis(const CavitySpec& cavity, double omega_v);

/// Redistributed vibronic displacements lambda^(i)_{phi,q} = c_qi (omega_v/omega_q) lambda_phi.
class DisplacementTable {
 public:
  DisplacementTable() = default;
  DisplacementTable(const ModeBasis& basis, const ReactionNetwork& network);

  /// Contribution of molecule `molecule` (0 or 1) in species `species` to mode q.
  double per_molecule(std::size_t molecule, std::size_t species, std::size_t q) const;
  /// Total displacement of mode q in electronic configuration `config`.
  double aggregate(const ElectronicConfig& config, std::size_t q) const;

 private:
  std::size_t species_count_ = 0;
  std::vector<double> values_;  // [molecule][species][q]
};

DisplacementTable build_displacements(const ModeBasis& basis, const ReactionNetwork& network);

/// Throws ValidationError unless all entries >= 0 and the total is <= 1.
void check_truncation(const Occupation& m);

/// Energy (cm^-1) of |config; m> in the polariton/dark basis, including the
/// polaron shift hbar*omega_v*sum(lambda^2) - sum_q hbar*omega_q*lambda_q^2.
double composite_energy_vsc(const ElectronicConfig& config, const Occupation& m,
                            const ModeBasis& basis, const DisplacementTable& table,
                            const ReactionNetwork& network);

/// Energy (cm^-1) of |config; m> in the local basis: sum E + m0*omega_c + omega_v*(m1 + m2).
double composite_energy_bare(const ElectronicConfig& config, const Occupation& m,
                             const ReactionNetwork& network, const CavitySpec& cavity);

}  // namespace vsckin
