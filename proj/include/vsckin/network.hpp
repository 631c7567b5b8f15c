#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace vsckin {

/// One reactive species (diabatic electronic state) of a molecule.
struct SpeciesSpec {
  std::string label;
  double energy = 0.0;        ///< E_phi, cm^-1
  double displacement = 0.0;  ///< lambda_phi, dimensionless
};

/// Diabatic coupling between two species. The pair is unordered.
struct CouplingSpec {
  std::string first;
  std::string second;
  double J = 0.0;         ///< diabatic coupling, cm^-1
  double lambda_s = 0.0;  ///< low-frequency reorganization energy, cm^-1
};

/// Resolved coupling between two species indices.
struct Coupling {
  double J = 0.0;
  double lambda_s = 0.0;
};

/// Species plus couplings, sharing one high-frequency vibration of
/// wavenumber omega_v. Pairs that are not listed have J = 0.
///
/// Construction validates: omega_v > 0, unique non-empty labels, couplings
/// reference declared species, no self-couplings or duplicate pairs, finite
/// values and lambda_s > 0 whenever J != 0.
class ReactionNetwork {
 public:
  ReactionNetwork() = default;
  ReactionNetwork(double omega_v, std::vector<SpeciesSpec> species,
                  std::vector<CouplingSpec> couplings);

  double omega_v() const { return omega_v_; }

  const std::vector<SpeciesSpec>& species() const { return species_; }
  const std::vector<CouplingSpec>& couplings() const { return couplings_; }
  std::size_t species_count() const { return species_.size(); }
  const SpeciesSpec& species(std::size_t index) const { return species_.at(index); }

  /// Index of a species label, or nullopt.
  std::optional<std::size_t> find(const std::string& label) const;
  /// Index of a species label; throws ValidationError if unknown.
  std::size_t index_of(const std::string& label) const;

  /// Coupling between species a and b (symmetric), nullopt when J = 0.
  std::optional<Coupling> coupling(std::size_t a, std::size_t b) const;

 private:
  double omega_v_ = 0.0;
  std::vector<SpeciesSpec> species_;
  std::vector<CouplingSpec> couplings_;
  std::vector<std::optional<Coupling>> table_;  // species_count^2, row-major
};

}  // namespace vsckin
