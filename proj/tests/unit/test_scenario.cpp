#include <doctest.h>

#include <cmath>

#include "vsckin/error.hpp"
#include "vsckin/scenario.hpp"

using namespace vsckin;

namespace {

ScenarioConfig reaction(int n) {
  return load_config(std::string(VSCKIN_CONFIG_DIR) + "/reaction" + std::to_string(n) + ".json");
}

// Normalized species fraction at the grid point closest to t.
double fraction_near(const ScenarioResult& r, const std::string& species, double t) {
  const auto& pts = r.trajectory.grid.points();
  std::size_t best = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (std::abs(std::log(pts[i] / t)) < std::abs(std::log(pts[best] / t))) best = i;
  }
  return r.trajectory.fraction(best, r.trajectory.species_index(species));
}

double peak(const ScenarioResult& r, const std::string& species) {
  double m = 0.0;
  for (double v : r.trajectory.fraction_series(species)) m = std::max(m, v);
  return m;
}

}  // namespace

TEST_SUITE("scenario") {
  TEST_CASE("reaction 1 bare converts on a ten-nanosecond scale") {
    ScenarioConfig c = reaction(1);
    c.regime = RegimeKind::kBare;
    const ScenarioResult r = run_scenario(c);
    CHECK(r.space->size() == 16);
    CHECK(r.regime.kind == RegimeKind::kBare);
    CHECK(fraction_near(r, "B", 1000.0) < 0.2);
    CHECK(fraction_near(r, "B", 5e4) > 0.9);
    CHECK(fraction_near(r, "B", 6000.0) == doctest::Approx(0.5).epsilon(0.1));
  }

  TEST_CASE("strong coupling accelerates reaction 1") {
    const auto runs = run_comparison(reaction(1), {RegimeKind::kBare, RegimeKind::kWeak, RegimeKind::kVsc});
    REQUIRE(runs.size() == 3);
    CHECK(runs[0].tag == "bare");
    CHECK(runs[2].tag == "vsc");
    for (double t : {2000.0, 4000.0, 6000.0, 9000.0}) {
      const double b = fraction_near(runs[0], "B", t);
      const double w = fraction_near(runs[1], "B", t);
      const double v = fraction_near(runs[2], "B", t);
      CHECK(v > w);
      CHECK(w > b);
    }
  }

  TEST_CASE("strong coupling accumulates the intermediate of reaction 3") {
    const auto runs = run_comparison(reaction(3), {RegimeKind::kBare, RegimeKind::kVsc});
    CHECK(peak(runs[1], "B") > peak(runs[0], "B") + 0.02);
    CHECK(fraction_near(runs[1], "C", 6000.0) < fraction_near(runs[0], "C", 6000.0));
  }

  TEST_CASE("comparison edge cases") {
    const ScenarioConfig c = reaction(1);
    CHECK_THROWS_AS(run_comparison(c, {}), ValidationError);
    CHECK_THROWS_AS(run_comparison(c, {RegimeKind::kBare, RegimeKind::kBare}), ValidationError);
    const auto single = run_comparison(c, {RegimeKind::kVsc});
    const ScenarioResult direct = run_scenario(c);
    REQUIRE(single.size() == 1);
    CHECK(single[0].tag.empty());
    CHECK(single[0].trajectory.state_populations == direct.trajectory.state_populations);
  }

  TEST_CASE("kappa sweep approaches bare kinetics as the cavity stops leaking") {
    SweepSpec s{SweepParameter::kKappa, {1.0, 0.1, 0.01, 0.0}, reaction(1)};
    const auto runs = run_sweep(s);
    ScenarioConfig bare = reaction(1);
    bare.regime = RegimeKind::kBare;
    const double b = fraction_near(run_scenario(bare), "B", 6000.0);
    double previous = INFINITY;
    for (const auto& r : runs) {
      const double gap = fraction_near(r, "B", 6000.0) - b;
      CHECK(gap < previous);
      previous = gap;
    }
    CHECK(runs.front().tag == "kappa=1");
    CHECK(runs.back().tag == "kappa=0");
    CHECK(previous < 0.5 * (fraction_near(runs.front(), "B", 6000.0) - b));
  }

  TEST_CASE("eta sweep changes the modification only weakly") {
    SweepSpec s{SweepParameter::kEta, {0.0, 1e-4, 1e-3}, reaction(1)};
    const auto runs = run_sweep(s);
    ScenarioConfig bare = reaction(1);
    bare.regime = RegimeKind::kBare;
    const double b = fraction_near(run_scenario(bare), "B", 6000.0);
    const double full = fraction_near(runs[2], "B", 6000.0) - b;
    const double none = fraction_near(runs[0], "B", 6000.0) - b;
    CHECK(none > 0.5 * full);
  }

  TEST_CASE("fast vibrational relaxation collapses the difference for reaction 3") {
    ScenarioConfig base = reaction(3);
    auto max_gap = [&](double gamma) {
      ScenarioConfig v = apply_sweep_value(base, SweepParameter::kGamma, gamma);
      ScenarioConfig b = v;
      b.regime = RegimeKind::kBare;
      const auto rv = run_scenario(v);
      const auto rb = run_scenario(b);
      double worst = 0.0;
      for (std::size_t t = 0; t < rv.trajectory.grid.size(); ++t) {
        for (std::size_t s = 0; s < 3; ++s) {
          worst = std::max(worst, std::abs(rv.trajectory.fraction(t, s) - rb.trajectory.fraction(t, s)));
        }
      }
      return worst;
    };
    CHECK(max_gap(1.0) < 0.2 * max_gap(0.01));
  }

  TEST_CASE("sweeps are deterministic across thread counts") {
    SweepSpec s{SweepParameter::kG, {10.0, 20.0, 42.0}, reaction(2)};
    const auto a = run_sweep(s, 1);
    const auto b = run_sweep(s, 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].tag == b[i].tag);
      CHECK(a[i].trajectory.state_populations == b[i].trajectory.state_populations);
    }
    CHECK(a[2].config.cavity.g == 42.0);
  }

  TEST_CASE("sweep validation") {
    CHECK_THROWS_AS(run_sweep({SweepParameter::kKappa, {}, reaction(1)}), ValidationError);
    CHECK_THROWS_AS(run_sweep({SweepParameter::kGamma, {0.1, -1.0}, reaction(1)}), ValidationError);
    CHECK_THROWS_AS(parse_sweep_parameter("omega"), ValidationError);
    CHECK(parse_sweep_parameter("eta") == SweepParameter::kEta);
    // A resonant cavity with g = 0 has degenerate modes, which the exchange law rejects.
    CHECK_THROWS_AS(run_sweep({SweepParameter::kG, {0.0}, reaction(1)}), ValidationError);
  }
}
