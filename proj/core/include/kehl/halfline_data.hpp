#pragma once

#include <string>
#include <vector>

#include "kehl/types.hpp"

namespace kehl {

// Sampled initial profile u0(x) and boundary traces g0(t), g1(t) on the
// half-line, with the coupling constant beta and decay metadata.
struct HalfLineData {
  std::vector<double> x_samples;  // strictly increasing, starts at 0
  std::vector<cplx> u0;
  std::vector<double> t_samples;  // strictly increasing, starts at 0
  std::vector<cplx> g0, g1;
  double beta = 0.0;              // real, nonzero
  double decay_floor = 1e-12;

  // Throws ConfigError on grid/shape violations, InvariantViolation when
  // |u0| fails to decay below decay_floor before the last x sample or the
  // corner compatibility (first two orders) is worse than corner_tol.
  void validate(double corner_tol = 1e-6) const;

  // One-sided 4th-order estimate of u0'(0).
  cplx u0_prime_at_zero() const;

  // Largest index such that |u0| >= decay_floor somewhere at or beyond it is
  // false; integration beyond truncation_index() is skipped.
  size_t truncation_index_x() const;
  size_t truncation_index_t() const;  // based on max(|g0|,|g1|)

  double trace_tail_magnitude() const;  // max(|g0|,|g1|) at final t
};

// Cumulative gauge phases of Eq. (2.22)-(2.23):
//   x_phase(x) = int_0^x |u0|^2 dx',
//   t_phase(t) = int_0^t Delta2(0,t') dt',
//   Delta2 = 4 beta^2 |g0|^4 + 2 beta Im(g1 conj(g0))   (real-valued).
struct GaugePhase {
  std::vector<double> x_phase;
  std::vector<double> t_phase;
};

GaugePhase make_gauge_phase(const HalfLineData& data);

double delta2_value(double beta, cplx g0, cplx g1);

// Off-diagonal x-part Lax matrix at t=0: entries u0 e^{2 i beta x_phase} and
// its conjugate mirror; trace zero.
struct U1Matrix {
  std::vector<cplx> v;  // (1,2) entry samples on x_samples
};
U1Matrix assemble_u1(const HalfLineData& data, const GaugePhase& phase);

// JSON profile I/O (schema: beta, x_samples[], u0_re[], u0_im[], t_samples[],
// g0_re[], g0_im[], g1_re[], g1_im[], optional decay_floor).
HalfLineData load_profile_json(const std::string& path);
void save_profile_json(const HalfLineData& d, const std::string& path);

}  // namespace kehl
