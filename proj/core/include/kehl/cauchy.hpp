#pragma once

#include <vector>

#include "kehl/quad.hpp"
#include "kehl/types.hpp"

namespace kehl {

// One straight panel of an oriented contour. Local coordinate w in [-1,1]
// maps to z = center + half*w; the panel is traversed from w=-1 to w=+1 in
// the contour's orientation, so the contour's plus side is Im w > 0 locally.
struct Panel {
  cplx z0, z1;             // endpoints, z0 -> z1
  cplx center, half;       // affine map
  std::vector<cplx> nodes; // Gauss-Legendre nodes mapped to the plane
  int order = 0;
  int segment_id = 0;      // which contour segment this panel belongs to
};

Panel make_panel(cplx z0, cplx z1, int order, int segment_id = 0);

// Legendre second-kind values Q_0..Q_{n-1}.
//
// On the open cut (-1,1) principal values with one-sided limits
//   Q_n(x ± i0) = Q_n(x) ∓ (i pi / 2) P_n(x)
// via the (stable on the cut) forward recurrence. Off the cut via a
// continued-fraction ratio and backward recurrence (forward is unstable
// there).
std::vector<double> legendre_q_cut(int n, double x);
std::vector<cplx> legendre_q_off(int n, cplx z);

// Row of the discrete Cauchy transform: weights mapping the panel's nodal
// values f(nodes) to
//   C[f interpolant](target) = (1/2 pi i) int_panel f(s)/(s - target) ds .
// `side` is used only when the target lies on the panel's own cut:
// +1 takes the plus-side boundary value (Im w -> 0+), -1 the minus side.
// Jacobians cancel: the weights depend on the local coordinate only.
std::vector<cplx> cauchy_row(const Panel& p, cplx target, int side);

// Values-to-Legendre-coefficients matrix for the panel's Gauss rule
// (row n, col j) = (2n+1)/2 * w_j * P_n(x_j); cached per order.
const std::vector<std::vector<double>>& legendre_coeff_matrix(int order);

// Interpolated evaluation of the panel's nodal data at local coordinate w.
cplx panel_interp(const Panel& p, const std::vector<cplx>& nodal, double w);

}  // namespace kehl
