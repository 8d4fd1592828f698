#include "kehl/special.hpp"

#include <cmath>

namespace kehl {

// Lanczos g=7, n=9 coefficients (Godfrey's set).
static const double lanczos_c[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

static cplx log_gamma_lanczos(cplx z) {
  // valid for Re z > 0.5; argument shifted internally (z -> z-1)
  z -= 1.0;
  cplx x = lanczos_c[0];
  for (int i = 1; i < 9; ++i) x += lanczos_c[i] / (z + double(i));
  cplx t = z + 7.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

cplx log_gamma(cplx z) {
  if (z.real() >= 0.5) return log_gamma_lanczos(z);
  // reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1-z),
  // with log sin evaluated stably for large |Im z|.
  cplx logsin;
  if (z.imag() > 0.0) {
    logsin = -iu * pi * z + std::log((std::exp(2.0 * iu * pi * z) - 1.0) /
                                     (2.0 * iu));
  } else {
    logsin = iu * pi * z + std::log((1.0 - std::exp(-2.0 * iu * pi * z)) /
                                    (2.0 * iu));
  }
  return std::log(pi) - logsin - log_gamma_lanczos(1.0 - z);
}

double arg_gamma_at_i_nu(double nu) {
  if (nu <= 0.0) return -0.5 * pi;
  // Gamma(i nu) = Gamma(1 + i nu)/(i nu); arg is continuous for nu > 0.
  return log_gamma(cplx(1.0, nu)).imag() - 0.5 * pi;
}

}  // namespace kehl
