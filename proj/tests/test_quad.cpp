#include <doctest.h>

#include <cmath>

#include "kehl/quad.hpp"

using namespace kehl;

TEST_CASE("gauss rules integrate polynomials exactly") {
  for (int n : {4, 9, 16}) {
    const auto& g = gauss_legendre(n);
    double s = 0;
    for (int i = 0; i < n; ++i) s += g.w[i];
    CHECK(s == doctest::Approx(2.0).epsilon(1e-14));
    // degree 2n-1 monomial
    double m = 0;
    int d = 2 * n - 2;
    for (int i = 0; i < n; ++i) m += g.w[i] * std::pow(g.x[i], d);
    CHECK(m == doctest::Approx(2.0 / (d + 1)).epsilon(1e-12));
  }
}

TEST_CASE("fornberg weights reproduce exact derivatives") {
  std::vector<double> xs{0.0, 0.1, 0.25, 0.4, 0.6};
  auto w = fornberg_weights(0.0, xs, 1);
  // derivative of x^3 at 0 is 0; of x at 0 is 1
  double d1 = 0, dx = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    d1 += w[i] * xs[i] * xs[i] * xs[i];
    dx += w[i] * xs[i];
  }
  CHECK(std::abs(d1) < 1e-12);
  CHECK(dx == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("cumulative simpson beats trapezoid on a smooth integrand") {
  const int n = 101;
  std::vector<double> x(n), f(n);
  for (int i = 0; i < n; ++i) {
    x[i] = double(i) / (n - 1);
    f[i] = std::exp(x[i]);
  }
  auto cs = cumsimpson(x, f);
  CHECK(cs.back() == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-7));
}

TEST_CASE("winding number of a polynomial") {
  auto f = [](cplx z) { return (z - cplx(0.3, 0.4)) * (z - cplx(-0.2, 0.6)); };
  std::vector<cplx> box{cplx(-1, 0), cplx(1, 0), cplx(1, 1), cplx(-1, 1),
                        cplx(-1, 0)};
  CHECK(winding_number(f, box) == 2);
  auto g = [](cplx z) { return z - cplx(0.0, -0.5); };  // zero outside
  CHECK(winding_number(g, box) == 0);
}

TEST_CASE("adaptive integration of an oscillatory integrand") {
  cplx v = integrate_adaptive(
      [](double x) { return std::exp(cplx(0, 10.0) * x); }, 0.0, 1.0, 1e-12);
  cplx expect = (std::exp(cplx(0, 10.0)) - 1.0) / cplx(0, 10.0);
  CHECK(std::abs(v - expect) < 1e-11);
}
