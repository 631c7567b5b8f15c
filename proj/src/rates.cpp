#include "vsckin/rates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "vsckin/displacement.hpp"
#include "vsckin/error.hpp"
#include "vsckin/units.hpp"

namespace vsckin {

void BathSpec::validate() const {
  if (!std::isfinite(gamma) || gamma < 0.0) throw ValidationError("bath: gamma must be >= 0");
  if (!std::isfinite(eta) || eta < 0.0) throw ValidationError("bath: eta must be >= 0");
  if (!std::isfinite(omega_cut) || omega_cut <= 0.0) {
    throw ValidationError("bath: omega_cut must be > 0");
  }
  if (!std::isfinite(temperature) || temperature <= 0.0) {
    throw ValidationError("bath: temperature must be > 0");
  }
}

const char* to_string(RegimeKind kind) {
  switch (kind) {
    case RegimeKind::kBare:
      return "bare";
    case RegimeKind::kWeak:
      return "weak";
    case RegimeKind::kVsc:
      return "vsc";
  }
  return "?";
}

RegimeKind parse_regime(const std::string& text) {
  if (text == "bare") return RegimeKind::kBare;
  if (text == "weak") return RegimeKind::kWeak;
  if (text == "vsc") return RegimeKind::kVsc;
  throw ValidationError("unknown regime '" + text + "' (expected bare, weak or vsc)");
}

RegimeSpec make_regime(RegimeKind kind, double g_strong) {
  switch (kind) {
    case RegimeKind::kBare:
      return {kind, 0.0};
    case RegimeKind::kWeak:
      return {kind, kWeakCouplingFraction * g_strong};
    case RegimeKind::kVsc:
      return {kind, g_strong};
  }
  return {kind, 0.0};
}

double RateMatrix::max_column_sum() const {
  const std::size_t n = dimension();
  double worst = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    double sum = 0.0;
    for (std::size_t r = 0; r < n; ++r) sum += generator(r, c);
    worst = std::max(worst, std::abs(sum));
  }
  return worst;
}

double franck_condon_vsc(const Occupation& m_out, const Occupation& m_in, std::size_t molecule,
                         std::size_t from, std::size_t to, const DisplacementTable& table) {
  double amplitude = 1.0;
  for (std::size_t q = 0; q < kModeCount; ++q) {
    const double shift = table.per_molecule(molecule, to, q) - table.per_molecule(molecule, from, q);
    amplitude *= displacement_matrix_element(m_out[q], m_in[q], shift);
  }
  return amplitude * amplitude;
}

double franck_condon_bare(const Occupation& m_out, const Occupation& m_in, std::size_t molecule,
                          std::size_t from, std::size_t to, const ReactionNetwork& network) {
  if (molecule >= kMoleculeCount) throw ValidationError("franck_condon_bare: bad molecule index");
  const std::size_t reacting = molecule + 1;
  const std::size_t spectator = molecule == 0 ? 2 : 1;
  if (m_out[0] != m_in[0] || m_out[spectator] != m_in[spectator]) return 0.0;
  const double shift = network.species(to).displacement - network.species(from).displacement;
  const double amplitude = displacement_matrix_element(m_out[reacting], m_in[reacting], shift);
  return amplitude * amplitude;
}

std::size_t reacting_molecule(const CompositeState& in, const CompositeState& out) {
  int changed = 0;
  std::size_t molecule = 0;
  for (std::size_t i = 0; i < kMoleculeCount; ++i) {
    if (in.config[i] != out.config[i]) {
      ++changed;
      molecule = i;
    }
  }
  if (changed != 1) {
    throw ValidationError("reactive transition must change exactly one molecule's species (" +
                          std::to_string(changed) + " changed)");
  }
  return molecule;
}

double reactive_rate(const CompositeState& in, const CompositeState& out,
                     const ReactionNetwork& network, double franck_condon, double temperature_k) {
  const std::size_t i = reacting_molecule(in, out);
  const auto coupling = network.coupling(in.config[i], out.config[i]);
  if (!coupling) return 0.0;
  const double kt = units::thermal_energy(temperature_k);
  const double ls = coupling->lambda_s;
  const double prefactor =
      std::sqrt(std::numbers::pi / (ls * kt)) * coupling->J * coupling->J / units::kHbar;
  const double activation = out.energy - in.energy + ls;
  return prefactor * franck_condon * std::exp(-activation * activation / (4.0 * ls * kt));
}

double loss_rate(std::size_t q, const ModeBasis& basis, const CavitySpec& cavity,
                 const BathSpec& bath) {
  const auto& c = basis.coefficients.at(q);
  return c[0] * c[0] * cavity.kappa + (c[1] * c[1] + c[2] * c[2]) * bath.gamma;
}

double gain_rate(double loss, double omega_q, double temperature_k) {
  if (!(loss >= 0.0)) throw ValidationError("gain_rate: loss must be >= 0");
  return loss * std::exp(-omega_q / units::thermal_energy(temperature_k));
}

double ohmic_spectral_density(double omega_angular, double eta, double omega_cut_angular) {
  const double r = omega_angular / omega_cut_angular;
  return eta * omega_angular * std::exp(-r * r);
}

double bose_einstein(double omega_angular, double temperature_k) {
  const double x = units::kHbar * omega_angular / units::thermal_energy(temperature_k);
  return 1.0 / std::expm1(x);
}

double exchange_rate(std::size_t q_from, std::size_t q_to, const ModeBasis& basis,
                     const BathSpec& bath) {
  if (q_from == q_to || q_from >= kModeCount || q_to >= kModeCount) {
    throw ValidationError("exchange_rate: modes must be distinct and in range");
  }
  double overlap = 0.0;
  for (std::size_t i = 1; i < kModeCount; ++i) {
    const double a = basis.coefficients[q_to][i];
    const double b = basis.coefficients[q_from][i];
    overlap += a * a * b * b;
  }
  const double delta = units::wavenumber_to_angular(basis.frequencies[q_to] -
                                                    basis.frequencies[q_from]);
  if (delta == 0.0) {
    throw ValidationError(std::string("exchange_rate: degenerate modes ") +
                          std::string(basis.label(q_from)) + " and " +
                          std::string(basis.label(q_to)));
  }
  const double cut = units::wavenumber_to_angular(bath.omega_cut);
  const double released = std::abs(delta);
  const double nbar = bose_einstein(released, bath.temperature);
  const double density = ohmic_spectral_density(released, bath.eta, cut);
  const double thermal = delta < 0.0 ? nbar + 1.0 : nbar;
  return 2.0 * std::numbers::pi * overlap * thermal * density;
}

double purcell_exchange_rate(double k_out_cavity, double k_out_vib, double g_weak,
                             double delta) {
  if (!(k_out_cavity >= 0.0) || !(k_out_vib >= 0.0)) {
    throw ValidationError("purcell_exchange_rate: outgoing rates must be >= 0");
  }
  const double k = k_out_cavity + k_out_vib;
  if (k == 0.0) {
    throw ValidationError("purcell_exchange_rate: cavity or vibration must decay (k_out > 0)");
  }
  const double g = units::wavenumber_to_angular(g_weak);
  const double d = units::wavenumber_to_angular(delta);
  return 4.0 * g * g * k / (4.0 * d * d + k * k);
}

namespace {

void set_rate(RateMatrix& k, std::size_t to, std::size_t from, double rate, RateChannel channel) {
  if (rate == 0.0) return;
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw NumericalError("rate " + std::to_string(from) + "->" + std::to_string(to) +
                         " is not a finite positive number");
  }
  const std::size_t n = k.dimension();
  if (k.channels[to * n + from] != RateChannel::kNone) {
    throw NumericalError("two rate laws populate the same generator entry");
  }
  k.generator(to, from) = rate;
  k.channels[to * n + from] = channel;
}

void fill_diagonal(RateMatrix& k) {
  const std::size_t n = k.dimension();
  for (std::size_t c = 0; c < n; ++c) {
    double out = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      if (r != c) out += k.generator(r, c);
    }
    k.generator(c, c) = -out;
  }
}

void add_reactive(RateMatrix& k, const StateSpace& space, const BathSpec& bath) {
  const auto& network = space.network();
  const DisplacementTable table(space.basis(), network);
  for (const auto& in : space.states()) {
    for (const auto& out : space.states()) {
      int changed = 0;
      for (std::size_t i = 0; i < kMoleculeCount; ++i) changed += in.config[i] != out.config[i];
      if (changed != 1) continue;
      const std::size_t i = reacting_molecule(in, out);
      const std::size_t from = in.config[i];
      const std::size_t to = out.config[i];
      if (!network.coupling(from, to)) continue;
      const double fc = space.kind() == BasisKind::kVsc
                            ? franck_condon_vsc(out.m, in.m, i, from, to, table)
                            : franck_condon_bare(out.m, in.m, i, from, to, network);
      set_rate(k, out.index, in.index, reactive_rate(in, out, network, fc, bath.temperature),
               RateChannel::kReactive);
    }
  }
}

void add_loss_gain(RateMatrix& k, const StateSpace& space, const CavitySpec& cavity,
                   const BathSpec& bath) {
  const auto& basis = space.basis();
  const std::size_t s = space.network().species_count();
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = 0; b < s; ++b) {
      const ElectronicConfig config{a, b};
      const std::size_t ground = space.index_of(config, -1);
      for (std::size_t q = 0; q < kModeCount; ++q) {
        const std::size_t excited = space.index_of(config, static_cast<int>(q));
        const double loss = loss_rate(q, basis, cavity, bath);
        set_rate(k, ground, excited, loss, RateChannel::kLoss);
        set_rate(k, excited, ground, gain_rate(loss, basis.frequencies[q], bath.temperature),
                 RateChannel::kGain);
      }
    }
  }
}

void add_exchange(RateMatrix& k, const StateSpace& space, const BathSpec& bath) {
  const auto& basis = space.basis();
  const std::size_t s = space.network().species_count();
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = 0; b < s; ++b) {
      const ElectronicConfig config{a, b};
      for (std::size_t qf = 0; qf < kModeCount; ++qf) {
        for (std::size_t qt = 0; qt < kModeCount; ++qt) {
          if (qf == qt) continue;
          set_rate(k, space.index_of(config, static_cast<int>(qt)),
                   space.index_of(config, static_cast<int>(qf)), exchange_rate(qf, qt, basis, bath),
                   RateChannel::kExchange);
        }
      }
    }
  }
}

void add_purcell(RateMatrix& k, const StateSpace& space, const CavitySpec& cavity,
                 const RegimeSpec& regime) {
  // Outgoing rates come from the bare generator before any Purcell entries.
  const std::size_t n = k.dimension();
  std::vector<double> k_out(n, 0.0);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      if (r != c) k_out[c] += k.generator(r, c);
    }
  }
  const double delta = cavity.omega_c - space.network().omega_v();
  const std::size_t s = space.network().species_count();
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = 0; b < s; ++b) {
      const ElectronicConfig config{a, b};
      const std::size_t cav = space.index_of(config, 0);
      for (int vib = 1; vib <= 2; ++vib) {
        const std::size_t v = space.index_of(config, vib);
        const double rate = purcell_exchange_rate(k_out[cav], k_out[v], regime.g_effective, delta);
        set_rate(k, v, cav, rate, RateChannel::kPurcell);
        set_rate(k, cav, v, rate, RateChannel::kPurcell);
      }
    }
  }
}

}  // namespace

RateMatrix assemble_rate_matrix(const StateSpace& space, const CavitySpec& cavity,
                                const BathSpec& bath, const RegimeSpec& regime) {
  cavity.validate();
  bath.validate();
  const bool vsc_basis = space.kind() == BasisKind::kVsc;
  if ((regime.kind == RegimeKind::kVsc) != vsc_basis) {
    throw ValidationError(std::string("regime '") + to_string(regime.kind) +
                          "' does not match the state-space basis");
  }

  const std::size_t n = space.size();
  RateMatrix k{Matrix(n, n), std::vector<RateChannel>(n * n, RateChannel::kNone)};
  add_reactive(k, space, bath);
  add_loss_gain(k, space, cavity, bath);
  if (regime.kind == RegimeKind::kVsc) add_exchange(k, space, bath);
  if (regime.kind == RegimeKind::kWeak) add_purcell(k, space, cavity, regime);
  fill_diagonal(k);
  return k;
}

}  // namespace vsckin
