#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "vsckin/displacement.hpp"

using namespace vsckin;

TEST_SUITE("displacement") {
  TEST_CASE("identity displacement") {
    CHECK(displacement_matrix_element(0, 0, 0.0) == 1.0);
    CHECK(displacement_matrix_element(2, 2, 0.0) == doctest::Approx(1.0));
    CHECK(displacement_matrix_element(1, 0, 0.0) == 0.0);
  }

  TEST_CASE("single-quantum elements and the index-swap sign") {
    const double expected = 1.5 * std::exp(-1.125);
    CHECK(displacement_matrix_element(1, 0, 1.5) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(displacement_matrix_element(0, 1, 1.5) == doctest::Approx(-expected).epsilon(1e-14));
    CHECK(displacement_matrix_element(1, 0, 1.5) == doctest::Approx(0.48698).epsilon(1e-5));
    CHECK(oracle::displacement(1, 0, 1.5) == doctest::Approx(expected).epsilon(1e-10));
  }

  TEST_CASE("agrees with a truncated matrix exponential") {
    for (double lambda : {-2.0, -0.3, 0.1, 0.728, 1.06, 1.5, 3.0}) {
      for (int mo = 0; mo <= 4; ++mo) {
        for (int mi = 0; mi <= 4; ++mi) {
          CHECK(std::abs(displacement_matrix_element(mo, mi, lambda) -
                         oracle::displacement(mo, mi, lambda)) < 1e-8);
        }
      }
    }
  }

  TEST_CASE("column unitarity") {
    // Sixty levels hold the full weight of every column with |lambda| <= 3
    // and m_in <= 2 to well below 1e-8.
    for (double lambda : {-3.0, -1.0, 0.5, 1.5, 3.0}) {
      for (int mi = 0; mi <= 2; ++mi) {
        double total = 0.0;
        for (int mo = 0; mo < 60; ++mo) {
          const double d = displacement_matrix_element(mo, mi, lambda);
          total += d * d;
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("thirty-level truncation loses exactly the Poisson tail") {
    // |<n|D(lambda)|0>|^2 is Poisson with mean lambda^2, so the weight beyond
    // level 29 is P(n >= 30).
    for (double lambda : {1.0, 2.0, 3.0}) {
      const double mean = lambda * lambda;
      double term = std::exp(-mean);
      double head = 0.0;
      for (int n = 0; n < 30; ++n) {
        head += term;
        term *= mean / (n + 1);
      }
      double total = 0.0;
      for (int mo = 0; mo < 30; ++mo) {
        const double d = displacement_matrix_element(mo, 0, lambda);
        total += d * d;
      }
      CHECK(total == doctest::Approx(head).epsilon(1e-13));
      CHECK(1.0 - total < 1e-6);
    }
  }

  TEST_CASE("associated Laguerre polynomials") {
    const double x = 0.7;
    CHECK(associated_laguerre(0, 3, x) == 1.0);
    CHECK(associated_laguerre(1, 2, x) == doctest::Approx(3.0 - x));
    CHECK(associated_laguerre(2, 0, x) == doctest::Approx(0.5 * (x * x - 4 * x + 2)));
    CHECK(associated_laguerre(3, 1, x) ==
          doctest::Approx((-x * x * x + 12 * x * x - 36 * x + 24) / 6.0));
  }
}
