#include "kehl/volterra.hpp"

#include <cmath>

namespace kehl {

void product_cell_weights(cplx omega, double h, cplx& c0, cplx& c1) {
  cplx z = omega * h;
  if (std::abs(z) < 0.5) {
    // c0 = h sum z^n / (n! (n+1)(n+2)),  c1 = h sum z^n / (n! (n+2))
    cplx term = 1.0, s0 = 0.0, s1 = 0.0;
    for (int n = 0; n < 16; ++n) {
      s0 += term / double((n + 1) * (n + 2));
      s1 += term / double(n + 2);
      term *= z / double(n + 1);
    }
    c0 = h * s0;
    c1 = h * s1;
  } else {
    cplx E = std::exp(z);
    c1 = E / omega - (E - 1.0) / (omega * omega * h);
    c0 = (E - 1.0) / omega - c1;
  }
}

static void sweep_once(const VolterraCoeffs& c, cplx omega, size_t stride,
                       cplx& p0, cplx& q0) {
  const auto& s = *c.grid;
  size_t m = c.last;
  if (stride == 2 && m % 2 == 1) m = (m + 1 < s.size()) ? m + 1 : m - 1;
  cplx p = 0.0, q = 1.0;
  for (size_t i = m; i >= stride; i -= stride) {
    size_t j = i - stride;  // step from node i down to node j
    double h = s[i] - s[j];
    cplx c0, c1;
    product_cell_weights(omega, h, c0, c1);
    cplx E = std::exp(omega * h);
    cplx rp = E * p - c1 * (c.A[i] * p + c.B[i] * q);
    cplx rq = q - 0.5 * h * (c.C[i] * p + c.D[i] * q);
    // [1 + c0*A_j, c0*B_j; (h/2)C_j, 1 + (h/2)D_j] [p_j; q_j] = [rp; rq]
    cplx a11 = 1.0 + c0 * c.A[j];
    cplx a12 = c0 * c.B[j];
    cplx a21 = 0.5 * h * c.C[j];
    cplx a22 = 1.0 + 0.5 * h * c.D[j];
    cplx det = a11 * a22 - a12 * a21;
    if (std::abs(det) < 0.1)
      throw ResolutionError("volterra step matrix near-singular",
                            std::abs(det));
    p = (a22 * rp - a12 * rq) / det;
    q = (a11 * rq - a21 * rp) / det;
    if (j == 0) break;
  }
  p0 = p;
  q0 = q;
}

SweepResult volterra_sweep(const VolterraCoeffs& c, cplx omega,
                           const VolterraOptions& opts) {
  SweepResult r;
  sweep_once(c, omega, 1, r.p, r.q);
  if (opts.richardson && c.last >= 4) {
    cplx pc, qc;
    sweep_once(c, omega, 2, pc, qc);
    cplx dp = (r.p - pc) / 3.0, dq = (r.q - qc) / 3.0;
    r.err_estimate = std::max(std::abs(dp), std::abs(dq));
    r.p += dp;
    r.q += dq;
    if (r.err_estimate > opts.tolerance)
      throw ResolutionError("volterra: extrapolation estimate above tolerance",
                            r.err_estimate);
  }
  return r;
}

ScatterXY scatter_x_at(const HalfLineData& data, const U1Matrix& u1, cplx k,
                       const VolterraOptions& opts) {
  if (k.imag() < -1e-12 * (1.0 + std::abs(k)))
    throw DomainError("scatter_x: k below the real axis");
  VolterraCoeffs c;
  c.grid = &data.x_samples;
  size_t n = data.x_samples.size();
  c.A.assign(n, 0.0);
  c.D.assign(n, 0.0);
  c.B = u1.v;
  c.C.resize(n);
  for (size_t i = 0; i < n; ++i) c.C[i] = std::conj(u1.v[i]);
  c.last = data.truncation_index_x();
  auto r = volterra_sweep(c, 2.0 * iu * k, opts);
  return {r.p, r.q, r.err_estimate};
}

ScatterXFirst scatter_x_first_column_at(const HalfLineData& data,
                                        const U1Matrix& u1, cplx k,
                                        const VolterraOptions& opts) {
  if (k.imag() > 1e-12 * (1.0 + std::abs(k)))
    throw DomainError("scatter_x first column: k above the real axis");
  VolterraCoeffs c;
  c.grid = &data.x_samples;
  size_t n = data.x_samples.size();
  c.A.assign(n, 0.0);
  c.D.assign(n, 0.0);
  c.B.resize(n);
  for (size_t i = 0; i < n; ++i) c.B[i] = std::conj(u1.v[i]);
  c.C = u1.v;
  c.last = data.truncation_index_x();
  auto r = volterra_sweep(c, -2.0 * iu * k, opts);
  return {r.q, r.p};  // q-row carries m11, p-row m21
}

U2Data make_u2_data(const HalfLineData& data, const GaugePhase& phase) {
  U2Data u;
  size_t n = data.t_samples.size();
  u.Vk.resize(n);
  u.V0.resize(n);
  u.g0_abs2.resize(n);
  for (size_t i = 0; i < n; ++i) {
    cplx ph = std::exp(-2.0 * iu * phase.t_phase[i]);
    u.Vk[i] = 2.0 * data.g0[i] * ph;
    u.V0[i] = (iu * data.g1[i] -
               2.0 * data.beta * std::norm(data.g0[i]) * data.g0[i]) *
              ph;
    u.g0_abs2[i] = std::norm(data.g0[i]);
  }
  u.tail_magnitude = data.trace_tail_magnitude();
  return u;
}

ScatterT scatter_t_at(const HalfLineData& data, const U2Data& u2, cplx k,
                      const VolterraOptions& opts) {
  cplx k2 = k * k;
  if (k2.imag() < -1e-12 * (1.0 + std::abs(k2)))
    throw DomainError("scatter_t: k outside closure(D1 u D3)");
  VolterraCoeffs c;
  c.grid = &data.t_samples;
  size_t n = data.t_samples.size();
  c.A.resize(n);
  c.B.resize(n);
  c.C.resize(n);
  c.D.resize(n);
  for (size_t i = 0; i < n; ++i) {
    c.A[i] = -iu * u2.g0_abs2[i];
    c.B[i] = k * u2.Vk[i] + u2.V0[i];
    c.C[i] = k * std::conj(u2.Vk[i]) + std::conj(u2.V0[i]);
    c.D[i] = iu * u2.g0_abs2[i];
  }
  c.last = data.truncation_index_t();
  auto r = volterra_sweep(c, 4.0 * iu * k2, opts);
  ScatterT out{r.p, r.q, r.err_estimate, 0.0};
  if (u2.tail_magnitude > data.decay_floor)
    out.tail_warning = u2.tail_magnitude;
  return out;
}

}  // namespace kehl
