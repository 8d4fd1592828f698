#pragma once

#include <array>
#include <functional>
#include <vector>

#include "kehl/types.hpp"

namespace kehl {

// Reflection coefficient r(s) on (-infty, 0]; callers hand in either the
// spline-backed pipeline evaluator or an analytic test function.
using ReflectionFn = std::function<cplx(double)>;

// nu(q) = -ln(1 - |q|^2) / (2 pi); DomainError for |q| >= 1.
double compute_nu(cplx q);

// Quadrature scaffold shared by the chi / delta / alpha integrals: graded
// Gauss panels on [s_min, k0] (graded toward the endpoint-log singularity at
// k0) carrying sigma = ln(1-|r|^2) and its derivative.
struct ChiQuadrature {
  double k0 = 0, s_min = 0;
  std::vector<double> nodes, weights;   // cover [s_min, k0 - sliver]
  std::vector<double> sigma, sigma_prime;
  // the last sliver [k0 - sliver, k0] carries the endpoint log singularity
  // and is integrated semi-analytically with frozen sigma data
  double sliver = 0;
  double sigma_k0 = 0;        // ln(1 - |r(k0)|^2)
  double sigma_prime_k0 = 0;
  double nu = 0;
  std::function<double(double)> sigma_fn;  // direct sigma evaluation
};

struct ChiOptions {
  double tail_abs = 1e-10;   // truncate where |r| falls below this
  double s_min_cap = -40.0;  // never search farther left than this
  int panels_regular = 24;
  int panels_graded = 22;
  double grade_ratio = 0.5;
  int order = 12;
  double fd_step = 1e-3;  // step for r'(s)
};

ChiQuadrature build_chi_quadrature(const ReflectionFn& r, double k0,
                                   const ChiOptions& opts = {});

// chi(k) = -(1/2 pi i) int ln(k - s) d ln(1-|r(s)|^2)   (Eq. 4.36 route)
cplx compute_chi(const ChiQuadrature& q, cplx k);

// delta via the direct Cauchy integral (Eq. 4.9) and via the factored form
// (k-k0)^{i nu} e^{chi(k)} (Eq. 4.34); both for k off (-infty, k0].
cplx compute_delta_integral(const ChiQuadrature& q, cplx k);
cplx compute_delta_factored(const ChiQuadrature& q, cplx k);

// Boundary values on the cut (k < k0). "plus" is the limit from the minus
// half-plane (the contour R- runs 0 -> -infty, so its left/plus side is
// below); with that convention delta_plus/delta_minus = 1/(1-|r(k)|^2).
struct DeltaBoundary {
  cplx plus, minus;
};
DeltaBoundary compute_delta_boundary(const ChiQuadrature& q, double k);

// beta^X(q) = sqrt(nu) e^{i(-3 pi/4 - arg q + arg Gamma(i nu))}; q = 0 returns
// 0 (the continuous limit).
cplx compute_beta_x(cplx q);

// Scalar inputs of the long-time evaluation at (xi, t). The integral pieces
// of alpha are t-independent and cached here so t-sweeps are cheap.
struct AsymptoticParams {
  double xi = 0;               // in (0, N]
  double k0 = 0;               // = -xi/4
  double nu = 0;
  cplx chi_k0{};               // chi(k0) (purely imaginary)
  cplx q{};                    // r(k0)
  double beta = 0;
  double boundary_phase_t = 0; // int_0^t Delta2 dt'
  double i_chi = 0;            // int ln(k0-s) d ln(1-|r(s)|^2)
  double i_tail = 0;           // int_0^{|k0|} ln(1-|r(-s)|^2) ds
  bool degenerate = false;     // r(k0) == 0
};

struct AsymptoticValue {
  cplx u_a{};       // sqrt(nu/2) e^{i alpha}; leading term is u_a / sqrt(t)
  double alpha = 0; // full phase of Theorem 4.2
  bool degenerate = false;  // r(k0) == 0; phase undefined
};

AsymptoticParams make_asymptotic_params(const ReflectionFn& r, double xi,
                                        double beta, double boundary_phase_t,
                                        const ChiOptions& opts = {});

// alpha = -3pi/4 - arg q + arg Gamma(i nu) - nu ln(8t) + 4 k0^2 t
//         + i_chi/pi + (2 beta/pi) i_tail + 2 boundary_phase_t
AsymptoticValue evaluate_asymptotic(const AsymptoticParams& p, double t);

// ---- Lemma 4.2 rational interpolant ---------------------------------------

// Taylor data p_j = Gamma^{(j)}(0) / j! (derivatives along iR+) and inverse
// moments Gamma_1..Gamma_3 of the large-k expansion.
struct GammaJet {
  std::array<cplx, 5> p{};
};
struct GammaMoments {
  std::array<cplx, 3> m{};
};

// Least-squares degree-10 polynomial fit on [0, window] along iR+; endpoint
// derivatives are read off the fitted coefficients.
GammaJet estimate_gamma_jet(const std::function<cplx(double)>& gamma_iaxis,
                            double window = 0.35);

// weighted least squares of Gamma(i kap) ~ sum m_j / (i kap)^j over
// [kap_lo, kap_hi]
GammaMoments fit_gamma_moments(const std::function<cplx(double)>& gamma_iaxis,
                               double kap_lo, double kap_hi,
                               int n_samples = 80);

struct InterpolantF0 {
  std::array<cplx, 8> a{};    // f0(k) = sum a_j / (k+i)^j
  double residual_zero = 0;   // mismatch of the five k->0 conditions
  double residual_inf = 0;    // mismatch of the three k->infty conditions
  cplx operator()(cplx k) const;
};

// Solves the 8x8 system of matching conditions; throws ResolutionError if the
// system is numerically degenerate.
InterpolantF0 interpolant_f0(const GammaJet& jet, const GammaMoments& mom);

// log-log decay fit of |gamma - f0| on i kappa over [lo, hi]:
// returns d ln|f| / d ln kappa.
double remainder_exponent(const std::function<cplx(double)>& gamma_iaxis,
                          const InterpolantF0& f0, double lo, double hi,
                          int n = 24);

}  // namespace kehl
