#pragma once

#include <string>

#include "kehl/spectral.hpp"

namespace kehl {

// CSV artifacts of the direct transform (one file per evaluation block, each
// carrying the version header):
//   ab_real.csv     k, a, b, A, B, r1                (full real axis)
//   reflections.csv k, d, Gamma, r, r2               (k <= 0)
//   iaxis_ab.csv    kappa, a, b                      (kappa >= 0)
//   iaxis_AB.csv    kappa, A, B                      (full kappa axis)
//   iaxis_gamma.csv kappa, d, Gamma                  (kappa >= 0)
//   cloud_ab.csv / cloud_AB.csv / probes_d1.csv      (evaluation clouds)
void save_spectral_csv(const SpectralSet& s, const std::string& dir);

// Rebuilds the axis blocks (and probe cloud) from the CSV artifacts.
SpectralSet load_spectral_csv(const std::string& dir);

}  // namespace kehl
