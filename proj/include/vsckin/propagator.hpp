#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "vsckin/matrix.hpp"
#include "vsckin/rates.hpp"
#include "vsckin/statespace.hpp"

namespace vsckin {

enum class GridSpacing { kLog, kLinear, kCustom };

const char* to_string(GridSpacing spacing);

/// Strictly increasing, non-negative sample times in ps.
class TimeGrid {
 public:
  TimeGrid() = default;
  /// Throws ValidationError unless points are finite, >= 0 and strictly increasing.
  TimeGrid(std::vector<double> points, GridSpacing spacing);

  static TimeGrid logarithmic(double t_start, double t_end, std::size_t count);
  static TimeGrid linear(double t_start, double t_end, std::size_t count);
  /// 400 log-spaced points from 0.1 ps to 5e4 ps.
  static TimeGrid default_grid();

  const std::vector<double>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  GridSpacing spacing() const { return spacing_; }
  double t_end() const { return points_.empty() ? 0.0 : points_.back(); }

 private:
  std::vector<double> points_;
  GridSpacing spacing_ = GridSpacing::kCustom;
};

enum class PropagationMethod { kPade, kUniformized };

/// Population vectors p(t) = exp(K t) p0 at every grid point, as a
/// (time x state) matrix. Throws ValidationError on dimension mismatch,
/// negative entries, or |sum(p0) - 1| > 1e-10.
Matrix propagate(const RateMatrix& k, std::span<const double> p0, const TimeGrid& grid,
                 PropagationMethod method = PropagationMethod::kPade);

/// Expected number of molecules of species `label` (0..2) in population p.
double species_population(std::span<const double> p, const StateSpace& space,
                          const std::string& label);

/// species_population / 2.
double normalized_species_fraction(std::span<const double> p, const StateSpace& space,
                                   const std::string& label);

struct Trajectory {
  TimeGrid grid;
  Matrix state_populations;    ///< time x state
  Matrix species_populations;  ///< time x species, raw counts in [0, 2]
  std::vector<std::string> state_labels;
  std::vector<std::string> species_labels;

  /// Raw count of species s at time index t divided by the molecule count.
  double fraction(std::size_t t, std::size_t s) const {
    return species_populations(t, s) / static_cast<double>(kMoleculeCount);
  }
  /// Column index of a species label; throws ValidationError if unknown.
  std::size_t species_index(const std::string& label) const;
  /// Normalized trajectory of one species.
  std::vector<double> fraction_series(const std::string& label) const;
};

/// Propagates and fills species aggregates.
Trajectory make_trajectory(const StateSpace& space, const RateMatrix& k,
                           std::span<const double> p0, const TimeGrid& grid,
                           PropagationMethod method = PropagationMethod::kPade);

/// Large-N modification test: VSC can alter the reaction when
/// epsilon/N >= k_d/(k_r + k_d).
struct CriterionResult {
  bool modifiable = false;
  double lhs = 0.0;  ///< epsilon / N
  double rhs = 0.0;  ///< k_d / (k_r + k_d), the decay efficiency of the hot product
};

CriterionResult vsc_scaling_criterion(double epsilon, double n_molecules, double k_r, double k_d);

/// Steady-state bare reaction rate k_f * k_d / (k_r + k_d).
double ssa_bare_rate(double k_f, double k_r, double k_d);

}  // namespace vsckin
