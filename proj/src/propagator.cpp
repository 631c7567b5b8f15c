#include "vsckin/propagator.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "vsckin/error.hpp"
#include "vsckin/expm.hpp"

namespace vsckin {

const char* to_string(GridSpacing spacing) {
  switch (spacing) {
    case GridSpacing::kLog:
      return "log";
    case GridSpacing::kLinear:
      return "linear";
    case GridSpacing::kCustom:
      return "custom";
  }
  return "?";
}

TimeGrid::TimeGrid(std::vector<double> points, GridSpacing spacing)
    : points_(std::move(points)), spacing_(spacing) {
  if (points_.empty()) throw ValidationError("time grid: at least one point is required");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i]) || points_[i] < 0.0) {
      throw ValidationError("time grid: points must be finite and >= 0");
    }
    if (i > 0 && !(points_[i] > points_[i - 1])) {
      throw ValidationError("time grid: points must be strictly increasing");
    }
  }
}

TimeGrid TimeGrid::logarithmic(double t_start, double t_end, std::size_t count) {
  if (!(t_start > 0.0) || !(t_end > t_start) || count < 2) {
    throw ValidationError("log grid: need 0 < t_start < t_end and at least 2 points");
  }
  std::vector<double> pts(count);
  const double a = std::log10(t_start);
  const double b = std::log10(t_end);
  for (std::size_t i = 0; i < count; ++i) {
    pts[i] = std::pow(10.0, a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1));
  }
  pts.front() = t_start;
  pts.back() = t_end;
  return TimeGrid(std::move(pts), GridSpacing::kLog);
}

TimeGrid TimeGrid::linear(double t_start, double t_end, std::size_t count) {
  if (!(t_start >= 0.0) || !(t_end > t_start) || count < 2) {
    throw ValidationError("linear grid: need 0 <= t_start < t_end and at least 2 points");
  }
  std::vector<double> pts(count);
  for (std::size_t i = 0; i < count; ++i) {
    pts[i] = t_start + (t_end - t_start) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  pts.back() = t_end;
  return TimeGrid(std::move(pts), GridSpacing::kLinear);
}

TimeGrid TimeGrid::default_grid() { return logarithmic(0.1, 5.0e4, 400); }

Matrix propagate(const RateMatrix& k, std::span<const double> p0, const TimeGrid& grid,
                 PropagationMethod method) {
  const std::size_t n = k.dimension();
  if (p0.size() != n) {
    throw ValidationError("propagate: population vector has " + std::to_string(p0.size()) +
                          " entries, generator has dimension " + std::to_string(n));
  }
  double total = 0.0;
  for (double v : p0) {
    if (!std::isfinite(v) || v < 0.0) {
      throw ValidationError("propagate: initial populations must be finite and >= 0");
    }
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw ValidationError("propagate: initial populations sum to " + std::to_string(total));
  }

  Matrix out(grid.size(), n);
  for (std::size_t ti = 0; ti < grid.size(); ++ti) {
    const double t = grid.points()[ti];
    const Matrix step = method == PropagationMethod::kPade ? expm_pade(scaled(k.generator, t))
                                                           : expm_uniformized(k.generator, t);
    const auto p = multiply(step, p0);
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(p[j])) throw NumericalError("propagate: non-finite population");
      out(ti, j) = p[j];
    }
  }
  return out;
}

double species_population(std::span<const double> p, const StateSpace& space,
                          const std::string& label) {
  if (p.size() != space.size()) throw ValidationError("species_population: dimension mismatch");
  const std::size_t s = space.network().index_of(label);
  double n = 0.0;
  for (const auto& st : space.states()) n += p[st.index] * st.count(s);
  return n;
}

double normalized_species_fraction(std::span<const double> p, const StateSpace& space,
                                   const std::string& label) {
  return species_population(p, space, label) / static_cast<double>(kMoleculeCount);
}

std::size_t Trajectory::species_index(const std::string& label) const {
  for (std::size_t i = 0; i < species_labels.size(); ++i) {
    if (species_labels[i] == label) return i;
  }
  throw ValidationError("trajectory has no species '" + label + "'");
}

std::vector<double> Trajectory::fraction_series(const std::string& label) const {
  const std::size_t s = species_index(label);
  std::vector<double> out(grid.size());
  for (std::size_t t = 0; t < grid.size(); ++t) out[t] = fraction(t, s);
  return out;
}

Trajectory make_trajectory(const StateSpace& space, const RateMatrix& k,
                           std::span<const double> p0, const TimeGrid& grid,
                           PropagationMethod method) {
  Trajectory tr;
  tr.grid = grid;
  tr.state_populations = propagate(k, p0, grid, method);
  const auto& network = space.network();
  const std::size_t ns = network.species_count();
  tr.species_populations = Matrix(grid.size(), ns);
  for (std::size_t t = 0; t < grid.size(); ++t) {
    const auto row = tr.state_populations.row(t);
    for (std::size_t s = 0; s < ns; ++s) {
      double n = 0.0;
      for (const auto& st : space.states()) n += row[st.index] * st.count(s);
      tr.species_populations(t, s) = n;
    }
  }
  for (std::size_t i = 0; i < space.size(); ++i) tr.state_labels.push_back(space.label(i));
  for (const auto& s : network.species()) tr.species_labels.push_back(s.label);
  return tr;
}

CriterionResult vsc_scaling_criterion(double epsilon, double n_molecules, double k_r,
                                      double k_d) {
  if (!(n_molecules >= 1.0)) throw ValidationError("criterion: N must be >= 1");
  if (!(k_r >= 0.0) || !(k_d >= 0.0)) throw ValidationError("criterion: rates must be >= 0");
  if (!(k_r + k_d > 0.0)) throw ValidationError("criterion: k_r + k_d must be > 0");
  if (!std::isfinite(epsilon) || epsilon < 0.0) {
    throw ValidationError("criterion: epsilon must be finite and >= 0");
  }
  CriterionResult r;
  r.lhs = epsilon / n_molecules;
  r.rhs = k_d / (k_r + k_d);
  r.modifiable = r.lhs >= r.rhs;
  return r;
}

double ssa_bare_rate(double k_f, double k_r, double k_d) {
  if (!(k_r + k_d > 0.0)) throw ValidationError("ssa_bare_rate: k_r + k_d must be > 0");
  return k_f * k_d / (k_r + k_d);
}

}  // namespace vsckin
