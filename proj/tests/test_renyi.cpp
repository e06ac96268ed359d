#include <cmath>
#include <random>

#include "doctest.h"
#include "momunc/errors.hpp"
#include "momunc/renyi.hpp"

using namespace momunc;

TEST_CASE("conjugate: fixed point, algebra and involution") {
  CHECK(conjugate_order(1.0) == 1.0);
  CHECK(conjugate_order(2.0 / 3.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(conjugate_order(conjugate_order(0.7)) ==
        doctest::Approx(0.7).epsilon(1e-15));
  CHECK_THROWS_AS(conjugate_order(0.5), std::domain_error);
  CHECK_THROWS_AS(RenyiIndex(0.3).conjugate(), std::domain_error);
  CHECK_THROWS_AS(RenyiIndex(-1.0), std::domain_error);
}

TEST_CASE("mu(lambda*) = -mu(lambda)") {
  for (double lambda : {0.6, 0.8, 1.3, 4.0}) {
    const RenyiIndex idx(lambda);
    CHECK(idx.conjugate().mu() == doctest::Approx(-idx.mu()).epsilon(1e-13));
  }
  CHECK_THROWS_AS(RenyiIndex(1.0).mu(), std::domain_error);
}

TEST_CASE("bound_B values") {
  CHECK(bound_B(RenyiIndex(1.0)) == 0.25);
  // alpha = 1/2: the conjugate index runs to infinity and its factor to 1.
  CHECK(bound_B(RenyiIndex(0.5)) ==
        doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
  CHECK(bound_B(RenyiIndex(0.5 + 1e-8)) ==
        doctest::Approx(std::exp(-2.0)).epsilon(1e-6));
  CHECK(bound_B(RenyiIndex(0.8)) ==
        doctest::Approx(bound_B(RenyiIndex(0.8).conjugate())).epsilon(1e-13));
  CHECK_THROWS_AS(log_bound_B(0.49), std::domain_error);
}

TEST_CASE("bound_B is unimodal with peak 1/4 at alpha = 1") {
  double prev = log_bound_B(0.5);
  for (int i = 1; i <= 40; ++i) {
    const double alpha = 0.5 + 0.5 * i / 40.0;
    const double cur = log_bound_B(alpha);
    CHECK(cur > prev);
    prev = cur;
  }
  for (int i = 1; i <= 40; ++i) {
    const double alpha = 1.0 + 19.0 * i / 40.0;
    const double cur = log_bound_B(alpha);
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("bound_Z branches") {
  CHECK(bound_Z(RenyiIndex(0.3), RenyiIndex(0.4)) ==
        doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
  CHECK(bound_Z(RenyiIndex(1.0), RenyiIndex(1.0)) == 0.25);
  CHECK(bound_Z(RenyiIndex(0.8), RenyiIndex(0.6)) ==
        doctest::Approx(bound_B(RenyiIndex(0.8))).epsilon(1e-15));
  // beta > alpha* carries no uncertainty relation.
  CHECK_THROWS_AS(bound_Z(RenyiIndex(0.8), RenyiIndex(1.5)),
                  NoUncertaintyRelationError);
}

TEST_CASE("gaussian power product is the sharpness witness") {
  CHECK(gaussian_power_product(RenyiIndex(1.0), 1.0) ==
        doctest::Approx(0.25).epsilon(1e-13));
  const double b075 = bound_B(RenyiIndex(0.75));
  CHECK(gaussian_power_product(RenyiIndex(0.75), 3.0) ==
        doctest::Approx(b075).epsilon(1e-13));
  // sigma-invariance
  CHECK(gaussian_power_product(RenyiIndex(0.75), 0.1) ==
        doctest::Approx(gaussian_power_product(RenyiIndex(0.75), 3.0))
            .epsilon(1e-13));
  // dim-invariance
  for (int d : {1, 2, 5, 9}) {
    CHECK(gaussian_power_product(RenyiIndex(1.4), 0.7, d) ==
          doctest::Approx(bound_B(RenyiIndex(1.4))).epsilon(1e-12));
  }
  CHECK_THROWS_AS(gaussian_power_product(RenyiIndex(0.4), 1.0),
                  std::domain_error);
  CHECK_THROWS_AS(gaussian_power_product(RenyiIndex(2.0), -1.0),
                  std::domain_error);
}

TEST_CASE("gaussian sharpness property over random draws") {
  std::mt19937 gen(123);
  std::uniform_real_distribution<double> adist(0.51, 6.0);
  std::uniform_real_distribution<double> sdist(0.05, 4.0);
  for (int i = 0; i < 100; ++i) {
    const RenyiIndex alpha(adist(gen));
    const double prod = gaussian_power_product(alpha, sdist(gen), 1 + i % 6);
    CHECK(prod == doctest::Approx(bound_B(alpha)).epsilon(1e-12));
  }
}

TEST_CASE("EntropyPower enforces positivity") {
  CHECK_THROWS_AS(EntropyPower(0.0), std::domain_error);
  CHECK(gaussian_entropy_power(1.0, 1.0, 3).value ==
        doctest::Approx(1.0).epsilon(1e-13));  // N_1 of a unit Gaussian
}
