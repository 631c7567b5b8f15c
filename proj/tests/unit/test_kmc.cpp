#include <doctest.h>

#include <cmath>

#include "vsckin/error.hpp"
#include "vsckin/kmc.hpp"
#include "vsckin/scenario.hpp"

using namespace vsckin;

namespace {

ScenarioModel model() {
  ScenarioConfig c = load_config(std::string(VSCKIN_CONFIG_DIR) + "/reaction1.json");
  c.regime = RegimeKind::kBare;
  return build_model(c);
}

}  // namespace

TEST_SUITE("kmc") {
  TEST_CASE("agrees with the deterministic propagator") {
    const ScenarioModel m = model();
    const TimeGrid checkpoints = TimeGrid::logarithmic(100.0, 3e4, 6);
    KmcOptions opts;
    opts.trajectories = 20000;
    opts.seed = 99;
    const KmcResult r = kmc_species_counts(m.rates, *m.space, m.initial, checkpoints.points(), opts);
    const Trajectory det = make_trajectory(*m.space, m.rates, m.initial, checkpoints);
    for (std::size_t c = 0; c < checkpoints.size(); ++c) {
      for (std::size_t s = 0; s < 2; ++s) {
        const double se = std::max(r.standard_error(c, s), 1.0 / 20000.0);
        CHECK(std::abs(r.mean(c, s) - det.species_populations(c, s)) < 4.0 * se);
      }
      CHECK(r.mean(c, 0) + r.mean(c, 1) == doctest::Approx(2.0));
    }
  }

  TEST_CASE("results depend on seed and shards but not on threads") {
    const ScenarioModel m = model();
    const std::vector<double> cps{500.0, 5000.0};
    KmcOptions opts;
    opts.trajectories = 3000;
    opts.shards = 8;
    opts.threads = 1;
    const KmcResult a = kmc_species_counts(m.rates, *m.space, m.initial, cps, opts);
    opts.threads = 4;
    const KmcResult b = kmc_species_counts(m.rates, *m.space, m.initial, cps, opts);
    CHECK(a.mean == b.mean);
    CHECK(a.standard_error == b.standard_error);
    opts.seed += 1;
    const KmcResult c = kmc_species_counts(m.rates, *m.space, m.initial, cps, opts);
    CHECK_FALSE(a.mean == c.mean);
  }

  TEST_CASE("initial checkpoint reproduces the initial condition") {
    const ScenarioModel m = model();
    KmcOptions opts;
    opts.trajectories = 500;
    const std::vector<double> cps{0.0};
    const KmcResult r = kmc_species_counts(m.rates, *m.space, m.initial, cps, opts);
    CHECK(r.mean(0, 0) == 2.0);
    CHECK(r.standard_error(0, 0) == 0.0);
  }

  TEST_CASE("input validation") {
    const ScenarioModel m = model();
    KmcOptions opts;
    opts.trajectories = 10;
    CHECK_THROWS_AS(kmc_species_counts(m.rates, *m.space, m.initial, std::vector<double>{2.0, 1.0}, opts),
                    ValidationError);
    CHECK_THROWS_AS(kmc_species_counts(m.rates, *m.space, std::vector<double>{1.0},
                                       std::vector<double>{1.0}, opts),
                    ValidationError);
    opts.trajectories = 0;
    CHECK_THROWS_AS(kmc_species_counts(m.rates, *m.space, m.initial, std::vector<double>{1.0}, opts),
                    ValidationError);
  }
}
