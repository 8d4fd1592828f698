#include <doctest.h>

#include <cmath>

#include "kehl/special.hpp"

using namespace kehl;

TEST_CASE("log_gamma on the real axis") {
  CHECK(std::abs(std::exp(log_gamma(cplx(5.0))) - 24.0) < 1e-11);
  CHECK(std::abs(std::exp(log_gamma(cplx(0.5))) - std::sqrt(pi)) < 1e-12);
  // reflection path
  cplx g = std::exp(log_gamma(cplx(-0.5)));
  CHECK(std::abs(g - (-2.0 * std::sqrt(pi))) < 1e-11);
}

TEST_CASE("|Gamma(i nu)|^2 = pi / (nu sinh(pi nu))") {
  for (double nu : {0.1, 0.5, 1.0, 2.3}) {
    cplx lg = log_gamma(cplx(0.0, nu));
    double mod2 = std::exp(2.0 * lg.real());
    double expect = pi / (nu * std::sinh(pi * nu));
    CHECK(mod2 == doctest::Approx(expect).epsilon(1e-11));
  }
}

TEST_CASE("arg Gamma(i nu) is continuous and tends to -pi/2") {
  CHECK(arg_gamma_at_i_nu(1e-9) == doctest::Approx(-0.5 * pi).epsilon(1e-6));
  // Euler: Gamma(1+i nu) ~ 1 - gamma_E i nu for small nu
  double gamma_e = 0.5772156649015329;
  double a = arg_gamma_at_i_nu(1e-4);
  CHECK(a == doctest::Approx(-0.5 * pi - gamma_e * 1e-4).epsilon(1e-6));
  // smoothness across a range
  double prev = arg_gamma_at_i_nu(0.01);
  for (double nu = 0.02; nu < 3.0; nu += 0.01) {
    double cur = arg_gamma_at_i_nu(nu);
    CHECK(std::abs(cur - prev) < 0.05);
    prev = cur;
  }
}
