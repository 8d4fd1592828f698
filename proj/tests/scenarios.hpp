#pragma once

// Shared synthetic scenarios for the test suites.

#include <cmath>
#include <vector>

#include "kehl/halfline_data.hpp"
#include "kehl/volterra.hpp"

namespace kehl::testing {

struct GaussianIC {
  double amp = 1.0, center = 5.0, width = 1.0;
  cplx operator()(double x) const {
    double z = (x - center) / width;
    return amp * std::exp(-z * z);
  }
  // int_0^x |u0|^2 dx' in closed form (phase-integral oracle)
  double phase_integral(double x) const {
    double w = width, c = center, a2 = amp * amp;
    double s = a2 * w * std::sqrt(pi / 2.0) / 2.0;
    return s * (std::erf(std::sqrt(2.0) * (x - c) / w) +
                std::erf(std::sqrt(2.0) * c / w));
  }
};

// initial profile with zero boundary traces (corner-compatible when the bump
// is centered well inside the domain)
inline HalfLineData make_ic_data(const GaussianIC& ic, double beta,
                                 double x_max = 20.0, int nx = 4001,
                                 double t_max = 2.0, int nt = 41) {
  HalfLineData d;
  d.beta = beta;
  d.x_samples.resize(nx);
  d.u0.resize(nx);
  for (int i = 0; i < nx; ++i) {
    d.x_samples[i] = x_max * i / (nx - 1);
    d.u0[i] = ic(d.x_samples[i]);
  }
  d.t_samples.resize(nt);
  d.g0.assign(nt, 0.0);
  d.g1.assign(nt, 0.0);
  for (int i = 0; i < nt; ++i) d.t_samples[i] = t_max * i / (nt - 1);
  return d;
}

// smooth Schwartz-class synthetic traces (not evolution traces; used where a
// controlled, rapidly decaying t-side is needed)
inline void add_synthetic_traces(HalfLineData& d, double a0, double a1,
                                 double center = 4.0, double t_max = 12.0,
                                 int nt = 3001) {
  d.t_samples.resize(nt);
  d.g0.resize(nt);
  d.g1.resize(nt);
  for (int i = 0; i < nt; ++i) {
    double t = t_max * i / (nt - 1);
    d.t_samples[i] = t;
    double e = std::exp(-(t - center) * (t - center));
    d.g0[i] = a0 * e * std::exp(iu * 0.4 * t);
    d.g1[i] = a1 * (t - center) * e * std::exp(iu * 0.15 * t);
  }
}

// Brute-force Neumann oracle: iterates the SAME discrete product-quadrature
// equations as the production sweep, as explicit nested sums, until the
// iteration is stationary. Independent of the marching code path.
inline void neumann_oracle(const VolterraCoeffs& c, cplx omega, cplx& p0,
                           cplx& q0, int max_iter = 400) {
  const auto& s = *c.grid;
  const size_t m = c.last;
  std::vector<cplx> p(m + 1, 0.0), q(m + 1, 1.0), pn(m + 1), qn(m + 1);
  std::vector<cplx> c0(m), c1(m), E(m);
  for (size_t j = 0; j < m; ++j) {
    product_cell_weights(omega, s[j + 1] - s[j], c0[j], c1[j]);
    E[j] = std::exp(omega * (s[j + 1] - s[j]));
  }
  for (int it = 0; it < max_iter; ++it) {
    double change = 0;
    for (size_t i = 0; i <= m; ++i) {
      cplx accp = 0, accq = 0, carry = 1.0;
      for (size_t j = i; j < m; ++j) {
        cplx Fl = c.A[j] * p[j] + c.B[j] * q[j];
        cplx Fr = c.A[j + 1] * p[j + 1] + c.B[j + 1] * q[j + 1];
        accp += carry * (c0[j] * Fl + c1[j] * Fr);
        carry *= E[j];
        cplx Gl = c.C[j] * p[j] + c.D[j] * q[j];
        cplx Gr = c.C[j + 1] * p[j + 1] + c.D[j + 1] * q[j + 1];
        accq += 0.5 * (s[j + 1] - s[j]) * (Gl + Gr);
      }
      pn[i] = -accp;
      qn[i] = 1.0 - accq;
      change = std::max(change, std::abs(pn[i] - p[i]));
      change = std::max(change, std::abs(qn[i] - q[i]));
    }
    p.swap(pn);
    q.swap(qn);
    if (change < 1e-15) break;
  }
  p0 = p[0];
  q0 = q[0];
}

}  // namespace kehl::testing
