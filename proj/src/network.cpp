#include "vsckin/network.hpp"

#include <cmath>
#include <utility>

#include "vsckin/error.hpp"

namespace vsckin {

ReactionNetwork::ReactionNetwork(double omega_v, std::vector<SpeciesSpec> species,
                                 std::vector<CouplingSpec> couplings)
    : omega_v_(omega_v), species_(std::move(species)), couplings_(std::move(couplings)) {
  if (!std::isfinite(omega_v_) || omega_v_ <= 0.0) {
    throw ValidationError("network: omega_v must be finite and > 0");
  }
  if (species_.empty()) throw ValidationError("network: at least one species is required");
  for (std::size_t i = 0; i < species_.size(); ++i) {
    const auto& s = species_[i];
    if (s.label.empty()) throw ValidationError("network: species label must be non-empty");
    if (!std::isfinite(s.energy) || !std::isfinite(s.displacement)) {
      throw ValidationError("network: species '" + s.label + "' has non-finite parameters");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (species_[j].label == s.label) {
        throw ValidationError("network: duplicate species label '" + s.label + "'");
      }
    }
  }

  const std::size_t n = species_.size();
  table_.assign(n * n, std::nullopt);
  for (const auto& c : couplings_) {
    const auto a = find(c.first);
    const auto b = find(c.second);
    if (!a || !b) {
      throw ValidationError("network: coupling " + c.first + "-" + c.second +
                            " references an undeclared species");
    }
    if (*a == *b) throw ValidationError("network: self-coupling of '" + c.first + "'");
    if (!std::isfinite(c.J) || !std::isfinite(c.lambda_s)) {
      throw ValidationError("network: coupling " + c.first + "-" + c.second + " is non-finite");
    }
    if (c.J != 0.0 && !(c.lambda_s > 0.0)) {
      throw ValidationError("network: coupling " + c.first + "-" + c.second +
                            " requires lambda_s > 0 when J != 0");
    }
    auto& slot = table_[*a * n + *b];
    if (slot) throw ValidationError("network: duplicate coupling " + c.first + "-" + c.second);
    if (c.J != 0.0) {
      slot = Coupling{c.J, c.lambda_s};
      table_[*b * n + *a] = slot;
    } else {
      // Keep the duplicate check honest for explicit zero couplings.
      slot = Coupling{0.0, c.lambda_s};
      table_[*b * n + *a] = slot;
    }
  }
  for (auto& slot : table_) {
    if (slot && slot->J == 0.0) slot.reset();
  }
}

std::optional<std::size_t> ReactionNetwork::find(const std::string& label) const {
  for (std::size_t i = 0; i < species_.size(); ++i) {
    if (species_[i].label == label) return i;
  }
  return std::nullopt;
}

std::size_t ReactionNetwork::index_of(const std::string& label) const {
  if (auto i = find(label)) return *i;
  throw ValidationError("unknown species label '" + label + "'");
}

std::optional<Coupling> ReactionNetwork::coupling(std::size_t a, std::size_t b) const {
  const std::size_t n = species_.size();
  if (a >= n || b >= n) return std::nullopt;
  return table_[a * n + b];
}

}  // namespace vsckin
