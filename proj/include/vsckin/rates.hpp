#pragma once

// Transition-rate laws and master-equation generator assembly.
//
// Reactive transitions use a Marcus-Levich-Jortner rate with a generalized
// Franck-Condon factor. Internal thermalization combines cavity/vibrational
// loss with detailed-balance gain and, in the polariton basis, exchange
// between polaritons and the dark mode through an Ohmic bath. The weak
// light-matter coupling regime adds Purcell-type vibration<->cavity exchange
// to the bare generator.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "vsckin/eigenstructure.hpp"
#include "vsckin/matrix.hpp"
#include "vsckin/network.hpp"
#include "vsckin/statespace.hpp"

namespace vsckin {

struct BathSpec {
  double gamma = 0.0;      ///< bare vibrational decay, ps^-1
  double eta = 0.0;        ///< dimensionless anharmonic coupling
  double omega_cut = 0.0;  ///< cutoff, cm^-1
  double temperature = 0.0;  ///< K

  /// Throws ValidationError unless gamma >= 0, eta >= 0, omega_cut > 0, T > 0.
  void validate() const;
};

enum class RegimeKind { kBare, kWeak, kVsc };

const char* to_string(RegimeKind kind);
/// Parses "bare", "weak", "vsc"; throws ValidationError otherwise.
RegimeKind parse_regime(const std::string& text);

struct RegimeSpec {
  RegimeKind kind = RegimeKind::kVsc;
  double g_effective = 0.0;  ///< cm^-1
};

/// Fraction of the strong-coupling g used in the weak-coupling regime.
inline constexpr double kWeakCouplingFraction = 0.01;

/// vsc: g, weak: g/100, bare: 0.
RegimeSpec make_regime(RegimeKind kind, double g_strong);

/// Which rate law produced a generator entry.
enum class RateChannel : std::uint8_t { kNone, kReactive, kLoss, kGain, kExchange, kPurcell };

/// Generator K of dp/dt = K p. K(j, i) is the rate of i -> j for j != i and
/// K(i, i) = -sum_{j != i} K(j, i), so columns sum to zero.
struct RateMatrix {
  Matrix generator;
  std::vector<RateChannel> channels;  ///< row-major, same shape as generator

  std::size_t dimension() const { return generator.rows(); }
  double rate(std::size_t to, std::size_t from) const { return generator(to, from); }
  RateChannel channel(std::size_t to, std::size_t from) const {
    return channels[to * dimension() + from];
  }
  /// Largest |column sum|.
  double max_column_sum() const;
};

/// |prod_q <m_out_q| D(lambda^(i)_{to,q} - lambda^(i)_{from,q}) |m_in_q>|^2
/// for molecule `molecule` reacting from species `from` to `to`.
double franck_condon_vsc(const Occupation& m_out, const Occupation& m_in, std::size_t molecule,
                         std::size_t from, std::size_t to, const DisplacementTable& table);

/// Local-basis factor: zero unless the cavity and spectator occupations are
/// unchanged, otherwise |<m_out_i| D(lambda_to - lambda_from) |m_in_i>|^2.
/// Occupation order is {cavity, vibration 1, vibration 2}.
double franck_condon_bare(const Occupation& m_out, const Occupation& m_in, std::size_t molecule,
                          std::size_t from, std::size_t to, const ReactionNetwork& network);

/// Molecule whose species differs between the two states. Throws
/// ValidationError unless exactly one molecule changes species.
std::size_t reacting_molecule(const CompositeState& in, const CompositeState& out);

/// Reactive rate (ps^-1) for in -> out given the Franck-Condon factor.
/// Returns 0 when the species pair is uncoupled.
double reactive_rate(const CompositeState& in, const CompositeState& out,
                     const ReactionNetwork& network, double franck_condon, double temperature_k);

/// Decay rate of a single excitation of mode q: |c_q0|^2 kappa + (|c_q1|^2 + |c_q2|^2) gamma.
double loss_rate(std::size_t q, const ModeBasis& basis, const CavitySpec& cavity,
                 const BathSpec& bath);

/// Detailed-balance partner of a loss rate: loss * exp(-omega_q / kT).
double gain_rate(double loss, double omega_q, double temperature_k);

/// Ohmic spectral density J(omega) = eta omega exp(-(omega/omega_cut)^2), angular units.
double ohmic_spectral_density(double omega_angular, double eta, double omega_cut_angular);

/// Bose-Einstein occupation 1/(exp(hbar omega / kT) - 1) for angular omega > 0.
double bose_einstein(double omega_angular, double temperature_k);

/// Exchange rate between single excitations of modes q_from -> q_to.
double exchange_rate(std::size_t q_from, std::size_t q_to, const ModeBasis& basis,
                     const BathSpec& bath);

/// Purcell exchange gamma' = 4 g^2 k / (4 Delta^2 + k^2), k = k_out_cavity + k_out_vib,
/// with g and Delta given in cm^-1 and converted to rad/ps.
double purcell_exchange_rate(double k_out_cavity, double k_out_vib, double g_weak,
                             double delta);

/// Assembles the generator for the regime. The state space basis must match
/// the regime (polariton basis for vsc, local basis for bare and weak).
RateMatrix assemble_rate_matrix(const StateSpace& space, const CavitySpec& cavity,
                                const BathSpec& bath, const RegimeSpec& regime);

}  // namespace vsckin
