#pragma once

// Kinetic Monte Carlo (Gillespie) sampling of the two-molecule master
// equation. Serves as a stochastic cross-check of the deterministic
// propagator on the same generator.

#include <cstddef>
#include <cstdint>
#include <span>

#include "vsckin/matrix.hpp"
#include "vsckin/rates.hpp"
#include "vsckin/statespace.hpp"

namespace vsckin {

struct KmcOptions {
  std::size_t trajectories = 100000;
  std::uint64_t seed = 20201;
  /// Trajectories are split into this many independently seeded shards;
  /// the result depends on (seed, shards) but not on `threads`.
  std::size_t shards = 16;
  unsigned threads = 0;  ///< 0 = hardware concurrency
};

struct KmcResult {
  std::vector<double> checkpoints;
  Matrix mean;            ///< checkpoint x species, mean molecule count
  Matrix standard_error;  ///< checkpoint x species
  std::size_t trajectories = 0;
};

/// Samples trajectories starting from p0 and records species counts at the
/// (increasing) checkpoint times.
KmcResult kmc_species_counts(const RateMatrix& k, const StateSpace& space,
                             std::span<const double> p0, std::span<const double> checkpoints,
                             const KmcOptions& options = {});

}  // namespace vsckin
