#include "doctest.h"
#include "lwpa/core.hpp"

#include <random>

using namespace lwpa;

TEST_CASE("dbm conversions match the reference operating points") {
  CHECK(dbm_to_watts(22.0) == doctest::Approx(0.1585).epsilon(1e-3));
  CHECK(dbm_to_watts(18.0) == doctest::Approx(0.0631).epsilon(1e-3));
  CHECK(dbm_to_watts(0.0) == doctest::Approx(0.001).epsilon(1e-12));
  CHECK(dbm_to_watts(-95.0) == doctest::Approx(3.162e-13).epsilon(1e-3));
}

TEST_CASE("dbm round trip") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-120.0, 60.0);
  for (int i = 0; i < 1000; ++i) {
    const double dbm = u(rng);
    CHECK(watts_to_dbm(dbm_to_watts(dbm)) == doctest::Approx(dbm).epsilon(1e-12));
  }
}

TEST_CASE("reference defaults") {
  const NetworkParams p = reference_default_params(0.5, 2e-4);
  CHECK(p.lambda_L == doctest::Approx(1e-4));
  CHECK(p.lambda_W == doctest::Approx(2e-4));
  CHECK(p.R_serve == 30.0);
  CHECK(p.delta == 50.0);
  CHECK(p.alpha == 4.0);
  CHECK(p.B_c == 1e7);
  CHECK(p.B_w == 1e7);
  CHECK(p.sigma2 == doctest::Approx(3.162e-13).epsilon(1e-3));
}

TEST_CASE("parameter invariants are enforced") {
  NetworkParams p = reference_default_params(0.5, 2e-4);
  SUBCASE("alpha <= 2") {
    p.alpha = 2.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  }
  SUBCASE("p_closed out of range") {
    p.p_closed = 1.5;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  }
  SUBCASE("negative density") {
    p.lambda_W = -1.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  }
}

TEST_CASE("window invariants") {
  CHECK_THROWS_AS(Window(0.0, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(Window(10.0, -1.0), std::invalid_argument);
  CHECK(Window(2000.0, 1000.0).area() == doctest::Approx(2e6));
}

TEST_CASE("empirical density arithmetic") {
  PointPattern p;
  p.window = Window(2000.0, 2000.0);
  CHECK(empirical_density(p) == 0.0);
  p.points.assign(800, Point{1.0, 1.0});
  CHECK(empirical_density(p) == doctest::Approx(2e-4));
}
