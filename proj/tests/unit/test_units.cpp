#include <doctest.h>

#include <cmath>
#include <limits>

#include "support/oracles.hpp"
#include "vsckin/error.hpp"
#include "vsckin/units.hpp"

using namespace vsckin;

TEST_SUITE("units") {
  TEST_CASE("wavenumber to angular frequency") {
    CHECK(units::wavenumber_to_angular(2000.0) == doctest::Approx(376.73).epsilon(1e-5));
    CHECK(units::wavenumber_to_angular(2000.0) == doctest::Approx(2000.0 * oracle::two_pi_c));
    CHECK(units::angular_to_wavenumber(units::wavenumber_to_angular(1234.5)) ==
          doctest::Approx(1234.5).epsilon(1e-15));
  }

  TEST_CASE("hbar times angular-per-wavenumber is one") {
    CHECK(units::kHbar * units::kAngularPerWavenumber == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(units::kHbar == doctest::Approx(5.3088).epsilon(1e-4));
  }

  TEST_CASE("thermal energy") {
    CHECK(units::thermal_energy(298.0) == doctest::Approx(207.12).epsilon(1e-4));
    CHECK(units::thermal_energy(1.0) == doctest::Approx(oracle::kB));
    CHECK_THROWS_AS(units::thermal_energy(0.0), ValidationError);
    CHECK_THROWS_AS(units::thermal_energy(-5.0), ValidationError);
    CHECK_THROWS_AS(units::thermal_energy(std::numeric_limits<double>::quiet_NaN()),
                    ValidationError);
  }
}
