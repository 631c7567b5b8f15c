#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "support/oracles.hpp"
#include "vsckin/error.hpp"
#include "vsckin/statespace.hpp"

using namespace vsckin;

namespace {

constexpr double kOmegaV = 2000.0;

ReactionNetwork three_species() {
  return ReactionNetwork(kOmegaV,
                         {{"A", 0.0, 0.0}, {"B", -2100.0, 1.5}, {"C", -2700.0, 4.5}},
                         {{"A", "B", 0.6, 100.0}, {"B", "C", 40.0, 600.0}});
}

CavitySpec cavity() { return {kOmegaV, 0.03 * kOmegaV / std::numbers::sqrt2, 2, 1.0}; }

}  // namespace

TEST_SUITE("statespace") {
  TEST_CASE("state count is species^2 times four") {
    const auto net = three_species();
    const StateSpace vsc = enumerate_states(net, BasisKind::kVsc, cavity());
    const StateSpace bare = enumerate_states(net, BasisKind::kBare, cavity());
    CHECK(vsc.size() == 36);
    CHECK(bare.size() == 36);
    CHECK(vsc.kind() == BasisKind::kVsc);
    CHECK(bare.kind() == BasisKind::kBare);
  }

  TEST_CASE("ordering, indices and labels") {
    const StateSpace s = enumerate_states(three_species(), BasisKind::kVsc, cavity());
    std::set<std::string> labels;
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(s[i].index == i);
      CHECK(s.index_of(s[i].config, s[i].excited_mode()) == i);
      labels.insert(s.label(i));
    }
    CHECK(labels.size() == s.size());
    CHECK(s.label(0) == "A,A;0");
    CHECK(s.label(1) == "A,A;+");
    CHECK(s.label(s.index_of({0, 1}, 2)) == "A,B;d");
    CHECK(s.label(s.index_of({2, 2}, 1)) == "C,C;-");
  }

  TEST_CASE("excitation bookkeeping") {
    const StateSpace s = enumerate_states(three_species(), BasisKind::kBare, cavity());
    const auto& st = s[s.index_of({1, 2}, 0)];
    CHECK(st.excited_mode() == 0);
    CHECK(st.m[0] == 1);
    CHECK(st.count(1) == 1);
    CHECK(st.count(2) == 1);
    CHECK(st.count(0) == 0);
    CHECK(s[s.index_of({0, 0}, -1)].excited_mode() == -1);
  }

  TEST_CASE("initial distribution is thermal over the reactant pair") {
    const StateSpace s = enumerate_states(three_species(), BasisKind::kVsc, cavity());
    const auto p = initial_distribution(s, "A", 298.0);
    CHECK(std::accumulate(p.begin(), p.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    std::vector<double> e;
    std::vector<bool> include;
    for (const auto& st : s.states()) {
      e.push_back(st.energy);
      include.push_back(st.config[0] == 0 && st.config[1] == 0);
    }
    const auto w = oracle::boltzmann(e, include, 298.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      CHECK(p[i] == doctest::Approx(w[i]).epsilon(1e-12));
      if (!include[i]) CHECK(p[i] == 0.0);
    }
    CHECK(p[0] > 0.999);
    CHECK_THROWS_AS(initial_distribution(s, "Z", 298.0), ValidationError);
    CHECK_THROWS_AS(initial_distribution(s, "A", 0.0), ValidationError);
  }
}
