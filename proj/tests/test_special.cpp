#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bifnet/special.hpp"

using namespace bifnet;

// Reference values computed with scipy 1.11 (gammainc / betainc / chi2.ppf / f.sf)
// at double precision.

TEST_CASE("regularized_gamma_p matches reference values") {
  CHECK(std::abs(regularized_gamma_p(0.5, 0.5) - 0.6826894921370859) <= 1e-12);
  CHECK(std::abs(regularized_gamma_p(1.5, 2.0) - 0.7385358700508888) <= 1e-12);
  CHECK(std::abs(regularized_gamma_p(4.0, 4.0) - 0.566529879633291) <= 1e-12);
  CHECK(std::abs(regularized_gamma_p(10.0, 3.0) - 0.0011024881301154815) <= 1e-14);
  CHECK(std::abs(regularized_gamma_p(2.5, 20.0) - 0.99999985066321) <= 1e-11);
}

TEST_CASE("regularized_gamma_p boundary and monotonicity") {
  CHECK(regularized_gamma_p(1.0, 0.0) == 0.0);
  CHECK(regularized_gamma_p(3.0, 1e6) == doctest::Approx(1.0).epsilon(1e-12));
  // exponential distribution: P(1, x) = 1 - exp(-x)
  CHECK(std::abs(regularized_gamma_p(1.0, 1.0) - (1.0 - std::exp(-1.0))) <= 1e-13);
  double prev = 0.0;
  for (double x = 0.25; x <= 8.0; x += 0.25) {
    const double cur = regularized_gamma_p(2.0, x);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("regularized_beta matches reference values") {
  CHECK(std::abs(regularized_beta(0.5, 2.0, 0.3) - 0.7394254526319747) <= 1e-12);
  CHECK(std::abs(regularized_beta(2.0, 3.0, 0.5) - 0.6875) <= 1e-13);
  CHECK(std::abs(regularized_beta(5.0, 5.0, 0.9) - 0.99910908) <= 1e-7);
  CHECK(std::abs(regularized_beta(0.5, 0.5, 0.5) - 0.5) <= 1e-12);
  CHECK(std::abs(regularized_beta(30.0, 2.0, 0.95) - 0.5365969098573434) <= 1e-11);
}

TEST_CASE("regularized_beta boundaries and symmetry") {
  CHECK(regularized_beta(2.0, 3.0, 0.0) == 0.0);
  CHECK(regularized_beta(2.0, 3.0, 1.0) == 1.0);
  // I_x(a,b) = 1 - I_{1-x}(b,a)
  for (double x : {0.1, 0.35, 0.62, 0.9}) {
    const double lhs = regularized_beta(2.5, 4.0, x);
    const double rhs = 1.0 - regularized_beta(4.0, 2.5, 1.0 - x);
    CHECK(std::abs(lhs - rhs) <= 1e-13);
  }
  // uniform case a = b = 1: I_x = x
  CHECK(std::abs(regularized_beta(1.0, 1.0, 0.37) - 0.37) <= 1e-14);
}

TEST_CASE("chi_squared_quantile matches scipy chi2.ppf") {
  CHECK(std::abs(chi_squared_quantile(1, 0.975) - 5.023886187314888) <= 1e-8);
  CHECK(std::abs(chi_squared_quantile(2, 0.975) - 7.377758908227871) <= 1e-8);
  CHECK(std::abs(chi_squared_quantile(3, 0.975) - 9.348403604496148) <= 1e-8);
  CHECK(std::abs(chi_squared_quantile(5, 0.975) - 12.832501994030027) <= 1e-8);
  CHECK(std::abs(chi_squared_quantile(8, 0.975) - 17.534546139484647) <= 1e-8);
  CHECK(std::abs(chi_squared_quantile(3, 0.5) - 2.3659738843753377) <= 1e-8);
  CHECK(std::abs(chi_squared_quantile(4, 0.99) - 13.276704135987622) <= 1e-8);
}

TEST_CASE("chi_squared_quantile inverts the CDF") {
  for (int dof : {1, 2, 3, 7}) {
    for (double p : {0.05, 0.5, 0.9, 0.975}) {
      const double q = chi_squared_quantile(dof, p);
      CHECK(std::abs(regularized_gamma_p(dof / 2.0, q / 2.0) - p) <= 1e-10);
    }
  }
}

TEST_CASE("f_upper_tail matches scipy f.sf") {
  CHECK(std::abs(f_upper_tail(1, 4, 4.5) - 0.10119150721829545) <= 1e-12);
  CHECK(std::abs(f_upper_tail(3, 10, 2.0) - 0.17800740737517545) <= 1e-12);
  CHECK(std::abs(f_upper_tail(3, 796, 5.0) - 0.0019314226200705682) <= 1e-12);
  CHECK(std::abs(f_upper_tail(2, 50, 1.0) - 0.37511680225396565) <= 1e-12);
  CHECK(std::abs(f_upper_tail(5, 3, 10.0) - 0.04341865566573004) <= 1e-12);
}

TEST_CASE("f_upper_tail edge behaviour") {
  CHECK(f_upper_tail(3, 10, 0.0) == 1.0);
  CHECK(f_upper_tail(3, 10, 1e9) <= 1e-6);
  double prev = 1.0;
  for (double x = 0.5; x <= 6.0; x += 0.5) {
    const double cur = f_upper_tail(2, 8, x);
    CHECK(cur < prev);
    prev = cur;
  }
}
