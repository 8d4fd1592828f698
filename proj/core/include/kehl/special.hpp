#pragma once

#include "kehl/types.hpp"

namespace kehl {

// Principal-branch log of the Gamma function for complex z (Lanczos, with
// reflection for Re z < 0.5). Accurate to ~1e-13 relative.
cplx log_gamma(cplx z);

// arg Gamma(i*nu) for nu > 0, continuous in nu (tends to -pi/2 as nu -> 0+).
double arg_gamma_at_i_nu(double nu);

}  // namespace kehl
