#include "vsckin/eigenstructure.hpp"

#include <cmath>
#include <string>

#include "vsckin/error.hpp"

namespace vsckin {

void CavitySpec::validate() const {
  if (!std::isfinite(omega_c) || omega_c <= 0.0) {
    throw ValidationError("cavity: omega_c must be > 0");
  }
  if (!std::isfinite(g) || g < 0.0) throw ValidationError("cavity: g must be >= 0");
  if (!std::isfinite(kappa) || kappa < 0.0) throw ValidationError("cavity: kappa must be >= 0");
  if (n_molecules != 2) {
    throw ValidationError("cavity: n_molecules must be 2, got " + std::to_string(n_molecules));
  }
}

std::string_view ModeBasis::label(std::size_t q) const {
  static constexpr std::array<std::string_view, kModeCount> kVscLabels{"+", "-", "d"};
  static constexpr std::array<std::string_view, kModeCount> kBareLabels{"c", "v1", "v2"};
  return kind == BasisKind::kVsc ? kVscLabels.at(q) : kBareLabels.at(q);
}

ModeBasis ModeBasis::with_dark_sign_flipped() const {
  ModeBasis flipped = *this;
  for (auto& c : flipped.coefficients[2]) c = -c;
  return flipped;
}

ModeBasis build_mode_basis(const CavitySpec& cavity, double omega_v) {
  cavity.validate();
  if (!std::isfinite(omega_v) || omega_v <= 0.0) {
    throw ValidationError("omega_v must be > 0");
  }
  const double n = static_cast<double>(cavity.n_molecules);
  const double collective = cavity.g * std::sqrt(n);
  const double detuning = cavity.omega_c - omega_v;
  const double split = std::sqrt(detuning * detuning + 4.0 * collective * collective);
  const double theta = 0.5 * std::atan2(2.0 * collective, detuning);
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  ModeBasis basis;
  basis.kind = BasisKind::kVsc;
  basis.omega_v = omega_v;
  basis.mixing_angle = theta;
  basis.frequencies = {0.5 * (cavity.omega_c + omega_v + split),
                       0.5 * (cavity.omega_c + omega_v - split), omega_v};
  basis.coefficients[0] = {ct, st * inv_sqrt2, st * inv_sqrt2};
  basis.coefficients[1] = {st, -ct * inv_sqrt2, -ct * inv_sqrt2};
  basis.coefficients[2] = {0.0, inv_sqrt2, -inv_sqrt2};
  return basis;
}

ModeBasis build_bare_basis(const CavitySpec& cavity, double omega_v) {
  cavity.validate();
  if (!std::isfinite(omega_v) || omega_v <= 0.0) {
    throw ValidationError("omega_v must be > 0");
  }
  ModeBasis basis;
  basis.kind = BasisKind::kBare;
  basis.omega_v = omega_v;
  basis.frequencies = {cavity.omega_c, omega_v, omega_v};
  basis.coefficients[0] = {1.0, 0.0, 0.0};
  basis.coefficients[1] = {0.0, 1.0, 0.0};
  basis.coefficients[2] = {0.0, 0.0, 1.0};
  return basis;
}

DisplacementTable::DisplacementTable(const ModeBasis& basis, const ReactionNetwork& network)
    : species_count_(network.species_count()),
      values_(kMoleculeCount * network.species_count() * kModeCount, 0.0) {
  for (std::size_t i = 0; i < kMoleculeCount; ++i) {
    for (std::size_t s = 0; s < species_count_; ++s) {
      const double lambda = network.species(s).displacement;
      for (std::size_t q = 0; q < kModeCount; ++q) {
        values_[(i * species_count_ + s) * kModeCount + q] =
            basis.coefficients[q][i + 1] * (basis.omega_v / basis.frequencies[q]) * lambda;
      }
    }
  }
}

double DisplacementTable::per_molecule(std::size_t molecule, std::size_t species,
                                       std::size_t q) const {
  if (molecule >= kMoleculeCount || species >= species_count_ || q >= kModeCount) {
    throw ValidationError("displacement table index out of range");
  }
  return values_[(molecule * species_count_ + species) * kModeCount + q];
}

double DisplacementTable::aggregate(const ElectronicConfig& config, std::size_t q) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < kMoleculeCount; ++i) sum += per_molecule(i, config[i], q);
  return sum;
}

DisplacementTable build_displacements(const ModeBasis& basis, const ReactionNetwork& network) {
  return DisplacementTable(basis, network);
}

void check_truncation(const Occupation& m) {
  int total = 0;
  for (int v : m) {
    if (v < 0) throw ValidationError("occupation numbers must be >= 0");
    total += v;
  }
  if (total > 1) {
    throw ValidationError("occupation outside the <=1-excitation truncation (total " +
                          std::to_string(total) + ")");
  }
}

double composite_energy_vsc(const ElectronicConfig& config, const Occupation& m,
                            const ModeBasis& basis, const DisplacementTable& table,
                            const ReactionNetwork& network) {
  check_truncation(m);
  double energy = 0.0;
  double bare_reorg = 0.0;
  for (std::size_t i = 0; i < kMoleculeCount; ++i) {
    const auto& s = network.species(config[i]);
    energy += s.energy;
    bare_reorg += s.displacement * s.displacement;
  }
  double mode_reorg = 0.0;
  for (std::size_t q = 0; q < kModeCount; ++q) {
    energy += m[q] * basis.frequencies[q];
    const double lambda_q = table.aggregate(config, q);
    mode_reorg += basis.frequencies[q] * lambda_q * lambda_q;
  }
  return energy + (basis.omega_v * bare_reorg - mode_reorg);
}

double composite_energy_bare(const ElectronicConfig& config, const Occupation& m,
                             const ReactionNetwork& network, const CavitySpec& cavity) {
  check_truncation(m);
  double energy = 0.0;
  for (std::size_t i = 0; i < kMoleculeCount; ++i) energy += network.species(config[i]).energy;
  return energy + m[0] * cavity.omega_c + network.omega_v() * (m[1] + m[2]);
}

}  // namespace vsckin
