#pragma once

// Physical constants and unit conversions.
//
// Canonical internal units: energy in cm^-1, time in ps, rates in ps^-1,
// temperature in K. An "energy" hbar*omega is always expressed as the
// corresponding wavenumber, so hbar * angular_per_wavenumber == 1.

#include <numbers>

namespace vsckin::units {

/// Speed of light in cm/ps (CODATA-2018, exact).
inline constexpr double kSpeedOfLight = 0.0299792458;

/// Boltzmann constant in cm^-1/K (CODATA-2018, k/hc).
inline constexpr double kBoltzmann = 0.695034800;

/// rad/ps of angular frequency per cm^-1 of wavenumber (2*pi*c).
inline constexpr double kAngularPerWavenumber = 2.0 * std::numbers::pi * kSpeedOfLight;

/// Reduced Planck constant in cm^-1 * ps.
inline constexpr double kHbar = 1.0 / kAngularPerWavenumber;

struct UnitSystem {
  double hbar = kHbar;
  double kB = kBoltzmann;
  double c = kSpeedOfLight;
  double angular_per_wavenumber = kAngularPerWavenumber;
};

inline constexpr UnitSystem kUnits{};

/// Wavenumber (cm^-1) to angular frequency (rad/ps).
constexpr double wavenumber_to_angular(double nu) { return nu * kAngularPerWavenumber; }

/// Angular frequency (rad/ps) to wavenumber (cm^-1).
constexpr double angular_to_wavenumber(double omega) { return omega / kAngularPerWavenumber; }

/// k_B*T in cm^-1. Throws ValidationError for T <= 0 or non-finite T.
double thermal_energy(double temperature_k);

}  // namespace vsckin::units
