#pragma once

#include "kehl/rh_solver.hpp"
#include "kehl/spectral.hpp"
#include "kehl/types.hpp"

namespace kehl {

// Four-ray jump on R u iR at the point (x, t):
//   iR+ : [[1, 0], [Gamma e^{phi}, 1]]
//   R-  : [[1, -conj(r) e^{-phi}], [r e^{phi}, 1 - r conj(r)]]
//   iR- : [[1, -conj(Gamma(conj k)) e^{-phi}], [0, 1]]
//   R+  : [[1 - r1 conj(r1), conj(r1) e^{-phi}], [-r1 e^{phi}, 1]]
// with phi = 2i(k x + 2 k^2 t) (= t*Phi(xi,k)). Orientation: R rays leave the
// origin, iR rays run toward it; the plus side is D1/D3 throughout.
struct JumpBuildOptions {
  double trunc_tol = 1e-12;    // |J - I| threshold for ray truncation
  double consistency_tol = 1e-10;
  double first_panel = 0.05;
  double growth = 1.9;
  double max_panel = 0.6;
};

struct BuiltContour {
  ContourRH contour;
  double radius_real = 0, radius_ipos = 0, radius_ineg = 0;
  double consistency_residual = 0;  // max |J2 - J1 J4^{-1} J3| at check points
};

class MainJumpBuilder {
 public:
  MainJumpBuilder(const SpectralSet& set);

  BuiltContour build(double x, double t,
                     const JumpBuildOptions& opts = {}) const;

  // individual jump factors evaluated by formula at real k < 0 (used by the
  // Eq. 3.4 consistency test; J1/J3 are continued off their rays)
  Mat2 j1_formula(double k, double x, double t) const;
  Mat2 j2_formula(double k, double x, double t) const;
  Mat2 j3_formula(double k, double x, double t) const;
  Mat2 j4_formula(double k, double x, double t) const;

 private:
  SpectralEvaluator eval_;
  CubicSpline gamma_neg_;  // Gamma on the negative real axis
  double k_cov_, kap_cov_;

  cplx phase(cplx k, double x, double t) const;
  friend struct MainJumpAccess;
};

// Model cross problem of the local analysis: jump on the four outward rays
// arg z in {pi/4, 3pi/4, -3pi/4, -pi/4} built from q (|q| < 1):
//   X1: [[1,0],[-q E z^{-2i nu}, 1]]          X2: [[1, -qb/(1-|q|^2) /E z^{2i nu}],[0,1]]
//   X3: [[1,0],[ q/(1-|q|^2) E z^{-2i nu},1]] X4: [[1, qb /E z^{2i nu}],[0,1]]
// with E = e^{i z^2/2}, principal-branch powers. The large-z (1,2)
// coefficient of the solution is -i beta_X(q).
ContourRH build_cross_contour(cplx q, double radius = 8.0,
                              double inner = 2e-6, double growth = 2.6);

}  // namespace kehl
