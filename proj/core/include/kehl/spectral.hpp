#pragma once

#include <optional>
#include <vector>

#include "kehl/halfline_data.hpp"
#include "kehl/interp.hpp"
#include "kehl/types.hpp"
#include "kehl/volterra.hpp"

namespace kehl {

// Spectral data of the direct transform sampled where the pipeline needs it:
// dense axis grids (jump assembly, reflection coefficients), a radial cloud in
// the analyticity domains (invariant scans), and a D1-interior probe cloud
// (global relation).
struct SpectralSet {
  double beta = 0;

  // real axis, ascending, symmetric about 0 (uniform grid recommended)
  std::vector<double> k_real;
  std::vector<cplx> a_re, b_re, A_re, B_re, r1_re;
  // derived quantities on the k <= 0 subset of k_real (ascending)
  std::vector<double> k_neg;
  std::vector<cplx> d_neg, gamma_neg, r_neg, r2_neg;

  // imaginary axis k = i*kappa; a,b valid for kappa >= 0 only
  std::vector<double> kappa;  // ascending, spans negative and positive values
  std::vector<cplx> A_im, B_im;
  std::vector<double> kappa_pos;
  std::vector<cplx> a_ipos, b_ipos, d_ipos, gamma_ipos;

  // radial fan clouds for invariant scans
  std::vector<cplx> cloud_ab_k, cloud_a, cloud_b;    // in closure(C+)
  std::vector<cplx> cloud_AB_k, cloud_A, cloud_B;    // in closure(D1 u D3)

  // D1-interior probe cloud carrying all four functions
  std::vector<cplx> probe_d1_k, probe_a, probe_b, probe_A, probe_B;

  double scatter_err_estimate = 0;  // max Richardson estimate seen
  double trace_tail_warning = 0;    // from scatter_t

  bool has_reflections() const { return !r_neg.empty(); }
};

struct SpectralGrids {
  double k_max_real = 12.0;
  int n_real = 2401;           // odd; grid symmetric about 0
  double kappa_max = 12.0;
  int n_kappa = 2401;
  int fan_radii = 25;          // log-spaced |k| in [fan_r_min, fan_r_max]
  double fan_r_min = 1e-2, fan_r_max = 1e3;
  int fan_angles = 9;
  int probe_count = 40;        // D1 probes with Im k^2 >= probe_min_im_k2
  double probe_min_im_k2 = 0.1;
  unsigned seed = 1;
};

// Runs scatter_x / scatter_t over all evaluation sets. derive_reflections is
// not called here; call it once afterwards.
SpectralSet compute_spectral_set(const HalfLineData& data,
                                 const SpectralGrids& grids = {},
                                 const VolterraOptions& vopts = {});

// Fills d, Gamma, r1, r, r2 per
//   d(k)     = a conj(A(conj k)) - b conj(B(conj k)),      k in closure(D2),
//   Gamma(k) = -conj(B(conj k)) / (a d),
//   r1(k)    = conj(b(conj k)) / a,     r = r1 + Gamma on R-,
//   r2(k)    = conj(r(conj k)) / (1 - r conj(r(conj k))).
// Throws ZeroAssumptionViolated when |a| or |d| drops below zero_threshold.
void derive_reflections(SpectralSet& s, double zero_threshold = 1e-6);

// sup over the stored D1 probe cloud of |B a - A b| (Eq. T=infinity global
// relation residual); certifies mutual compatibility of (u0, g0, g1).
double global_relation_residual(const SpectralSet& s);

// Direct variant for refinement studies: evaluates at the given probes.
double global_relation_residual(const HalfLineData& data,
                                const std::vector<cplx>& probes,
                                const VolterraOptions& vopts = {});

std::vector<cplx> default_d1_probes(int count, double min_im_k2,
                                    unsigned seed);

// Active verification of the solitonless assumption: min-modulus scan over
// the evaluated sets plus argument-principle winding counts of a over
// [-K,K]x[0,K_im] and of d over [-K,0]x[0,K_im]. Throws
// ZeroAssumptionViolated on a nonzero winding or a small modulus.
struct ZeroScanReport {
  double min_abs_a = 0, min_abs_d = 0;
  int winding_a = 0, winding_d = 0;
};
ZeroScanReport scan_zeros(const HalfLineData& data, double k_box = 10.0,
                          double zero_threshold = 1e-6,
                          const VolterraOptions& vopts = {});

// Spline-backed access to the sampled spectral set, used by the jump builder
// and the asymptotics quadratures.
class SpectralEvaluator {
 public:
  explicit SpectralEvaluator(const SpectralSet& s);
  cplx r1(double k) const;          // on R
  cplx r(double k) const;           // on R- (DomainError outside coverage)
  cplx r2(double k) const;          // on R-
  cplx gamma_iaxis(double kap) const;  // Gamma(i kap), kap >= 0
  double k_real_max() const { return r1_.x_max(); }
  double kappa_max() const { return gam_.x_max(); }
  double k_neg_min() const { return r_.x_min(); }

 private:
  CubicSpline r1_, r_, r2_, gam_;
};

}  // namespace kehl
