#pragma once

#include <vector>

#include "kehl/halfline_data.hpp"
#include "kehl/types.hpp"

namespace kehl {

// Backward product-trapezoid sweep for the half-line Volterra systems
//
//   p(s_i) = -int_{s_i}^{s_m} e^{omega (s'-s_i)} (A p + B q)(s') ds'
//   q(s_i) = 1 - int_{s_i}^{s_m} (C p + D q)(s') ds'
//
// The oscillatory factor e^{omega s} is integrated exactly against the
// piecewise-linear interpolant of (A p + B q); |e^{omega h}| <= 1 is required
// (guaranteed on the analyticity domains). Each step solves a 2x2 system, so
// the sweep is the exact solution of the discretized equations (the
// brute-force Neumann oracle in the tests iterates the same discrete system).
struct VolterraCoeffs {
  const std::vector<double>* grid = nullptr;  // s_0 < ... < s_{n-1}
  std::vector<cplx> A, B, C, D;               // sampled coefficients
  size_t last = 0;                            // sweep starts here (p=0, q=1)
};

struct SweepResult {
  cplx p, q;
  double err_estimate = 0;  // |fine - coarse|/3 from stride-2 extrapolation
};

struct VolterraOptions {
  bool richardson = true;
  // bound on the coarse/fine disagreement |S_h - S_2h|/3 (which tracks the
  // second-order error of the UNEXTRAPOLATED sweep; the extrapolated result
  // is two orders better). ResolutionError when exceeded.
  double tolerance = 2e-4;
};

SweepResult volterra_sweep(const VolterraCoeffs& c, cplx omega,
                           const VolterraOptions& opts = {});

// Weights of the exact integration of e^{omega s} against the linear hat
// functions on a cell of width h: c0 pairs with the left value, c1 with the
// right. Exposed for the test-side oracle.
void product_cell_weights(cplx omega, double h, cplx& c0, cplx& c1);

// ---- spectral-direct operations -------------------------------------------

struct ScatterXY {
  cplx b, a;                 // second column of mu3 at x=0: (b(k), a(k))
  double err_estimate = 0;
};

// a(k), b(k) for Im k >= 0 (DomainError otherwise).
ScatterXY scatter_x_at(const HalfLineData& data, const U1Matrix& u1, cplx k,
                       const VolterraOptions& opts = {});

// First column (conj(a(conj k)), conj(b(conj k))) for Im k <= 0, computed by
// an independent sweep; used by the Schwarz-symmetry dual route.
struct ScatterXFirst {
  cplx m11, m21;
};
ScatterXFirst scatter_x_first_column_at(const HalfLineData& data,
                                        const U1Matrix& u1, cplx k,
                                        const VolterraOptions& opts = {});

// Precomputed t-direction kernel pieces: V(t,k) = k*Vk + V0,
// W(t,k) = k*conj(Vk) + conj(V0), diagonal -i|g0|^2 / +i|g0|^2.
struct U2Data {
  std::vector<cplx> Vk, V0;
  std::vector<double> g0_abs2;
  double tail_magnitude = 0;  // max(|g0|,|g1|) at the final t sample
};
U2Data make_u2_data(const HalfLineData& data, const GaugePhase& phase);

struct ScatterT {
  cplx B, A;
  double err_estimate = 0;
  double tail_warning = 0;  // nonzero: traces not decayed at final t
};

// A(k), B(k) for Im k^2 >= 0 (closure of D1 u D3; DomainError otherwise).
ScatterT scatter_t_at(const HalfLineData& data, const U2Data& u2, cplx k,
                      const VolterraOptions& opts = {});

}  // namespace kehl
