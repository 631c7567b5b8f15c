#include "vsckin/units.hpp"

#include <cmath>
#include <string>

#include "vsckin/error.hpp"

namespace vsckin::units {

double thermal_energy(double temperature_k) {
  if (!std::isfinite(temperature_k) || temperature_k <= 0.0) {
    throw ValidationError("temperature must be finite and > 0 K, got " +
                          std::to_string(temperature_k));
  }
  return kBoltzmann * temperature_k;
}

}  // namespace vsckin::units
