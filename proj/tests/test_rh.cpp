#include <doctest.h>

#include <cmath>

#include "kehl/asymptotics.hpp"
#include "kehl/jump_builder.hpp"
#include "kehl/quad.hpp"
#include "kehl/rh_solver.hpp"

using namespace kehl;

TEST_CASE("legendre Q: off-cut values match direct quadrature") {
  for (cplx z : {cplx(2.5, 0.0), cplx(0.3, 1.1), cplx(-1.0, 0.02),
                 cplx(1.004, 0.0), cplx(0.2, -0.6)}) {
    auto q = legendre_q_off(8, z);
    for (int n : {0, 3, 7}) {
      cplx direct = 0.5 * integrate_adaptive(
                              [&](double t) {
                                return legendre_p_all(n + 1, t).back() /
                                       (z - t);
                              },
                              -1.0, 1.0, 1e-13);
      CHECK(std::abs(q[n] - direct) < 2e-10);
    }
  }
}

TEST_CASE("legendre Q: boundary values obey the Plemelj jump") {
  double x = 0.37;
  auto qc = legendre_q_cut(6, x);
  auto pv = legendre_p_all(6, x);
  auto qup = legendre_q_off(6, cplx(x, 1e-9));
  auto qdn = legendre_q_off(6, cplx(x, -1e-9));
  for (int n = 0; n < 6; ++n) {
    CHECK(std::abs(qup[n] - (qc[n] - iu * 0.5 * pi * pv[n])) < 1e-6);
    CHECK(std::abs(qdn[n] - (qc[n] + iu * 0.5 * pi * pv[n])) < 1e-6);
  }
}

TEST_CASE("cauchy_row reproduces the Cauchy transform of a smooth density") {
  Panel p = make_panel(cplx(-0.3, -0.2), cplx(0.9, 0.7), 14);
  auto f = [](cplx s) { return std::exp(s) / (s - cplx(3.0, 0.5)); };
  std::vector<cplx> nodal(p.order);
  for (int j = 0; j < p.order; ++j) nodal[j] = f(p.nodes[j]);
  for (cplx z : {cplx(1.5, -0.4), cplx(0.0, 0.5), cplx(0.31, 0.25)}) {
    auto row = cauchy_row(p, z, 0);
    cplx via_row = 0;
    for (int j = 0; j < p.order; ++j) via_row += row[j] * nodal[j];
    cplx direct = integrate_adaptive(
                      [&](double w) {
                        cplx s = p.center + p.half * w;
                        return f(s) / (s - z) * p.half;
                      },
                      -1.0, 1.0, 1e-13) /
                  (2.0 * pi * iu);
    CHECK(std::abs(via_row - direct) < 1e-11);
  }
}

TEST_CASE("identity jumps give the identity solution") {
  ContourRH c;
  RHSegment s;
  s.z0 = cplx(-2, 0);
  s.z1 = cplx(2, 0);
  s.first_panel = 1.0;
  s.jump = [](cplx) { return Mat2::Identity(); };
  s.name = "line";
  c.segments.push_back(s);
  auto sol = solve_rh(c);
  CHECK(std::abs(sol.m_coeff) < 1e-14);
  CHECK(sol.residual < 1e-13);
  for (auto& m : sol.mu)
    CHECK((m - Mat2::Identity()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("nilpotent jump has the closed-form solution") {
  // J = [[1, g],[0,1]] on a segment: mu_11 = 1, m_coeff = -(1/2pi i) int g
  auto g = [](cplx k) { return std::exp(-2.0 * k * k) * (1.0 + 0.3 * k); };
  ContourRH c;
  RHSegment s;
  s.z0 = cplx(-4, 0);
  s.z1 = cplx(4, 0);
  s.first_panel = 0.5;
  s.growth = 1.5;
  s.name = "line";
  s.local_freq = [](cplx k) { return 2.0 + 4.0 * std::abs(k.real()); };
  s.jump = [&](cplx k) {
    Mat2 j = Mat2::Identity();
    j(0, 1) = g(k);
    return j;
  };
  c.segments.push_back(s);
  auto sol = solve_rh(c);
  cplx expect = -integrate_adaptive(g, -4.0, 4.0, 1e-13) / (2.0 * pi * iu);
  CHECK(std::abs(sol.m_coeff - expect) < 1e-11);
  // and the off-contour evaluation matches the direct Cauchy integral
  cplx z(0.3, 0.8);
  Mat2 M = evaluate_m(sol, c, z);
  cplx direct = integrate_adaptive(
                    [&](double k) { return g(cplx(k, 0)) / (k - z); }, -4.0,
                    4.0, 1e-13) /
                (2.0 * pi * iu);
  CHECK(std::abs(M(0, 1) - direct) < 1e-11);
  CHECK(std::abs(M(0, 0) - 1.0) < 1e-12);
  CHECK(std::abs(M(1, 1) - 1.0) < 1e-12);
}

TEST_CASE("linearized cross problem matches the small-q limit") {
  // the one-iterate solution fixes the ray orientations:
  // m1 -> conj(q) e^{i pi/4} / sqrt(2 pi) as q -> 0
  cplx q(1e-4, 5e-5);
  auto c = build_cross_contour(q);
  auto sol = solve_rh(c);
  cplx predict = std::conj(q) * std::exp(iu * pi / 4.0) /
                 std::sqrt(2.0 * pi);
  CHECK(std::abs(sol.m_coeff - predict) < 1e-8 * std::abs(q) / 1e-4);
}

TEST_CASE("cross model problem reproduces beta_X") {
  for (cplx q : {cplx(0.3, 0.0), cplx(0.5, 0.0), cplx(0.0, 0.7)}) {
    auto c = build_cross_contour(q);
    RHOptions opts;
    opts.panel_order = 14;
    auto sol = solve_rh(c, opts);
    cplx beta_num = iu * sol.m_coeff;  // m1 = -i beta_X
    cplx beta = compute_beta_x(q);
    CHECK(std::abs(std::abs(beta_num) - std::abs(beta)) < 1e-3);
    double dphase = std::arg(beta_num / beta);
    CHECK(std::abs(dphase) < 1e-3);
    // determinant preservation at off-contour probes
    for (cplx z : {cplx(0.9, 0.1), cplx(-0.4, 1.3), cplx(0.0, -2.0)}) {
      Mat2 M = evaluate_m(sol, c, z);
      CHECK(std::abs(M.determinant() - 1.0) < 1e-8);
    }
  }
}
