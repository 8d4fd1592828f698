#pragma once

#include <vector>

#include "kehl/jump_builder.hpp"
#include "kehl/rh_solver.hpp"
#include "kehl/spectral.hpp"

namespace kehl {

// Running phases feeding the reconstruction:
//   boundary_phase(t) = int_0^t Delta2 dt',
//   m_x_integral(x)   = int_0^x |m(x',t)|^2 dx'   (cumulative Simpson).
struct PhaseAccumulator {
  double boundary_phase_t = 0;       // value at the reconstruction time
  std::vector<double> m_x_integral;  // on the reconstruction x-grid
};

struct RecoveredField {
  double t = 0;
  std::vector<double> x;
  std::vector<cplx> u;
  std::vector<cplx> m;
  std::vector<double> residual;  // RH residual per point (nan if failed)
  std::vector<char> ok;
  PhaseAccumulator phases;
};

// Pure phase assembly of u = 2 i m e^{2 i (boundary_phase - 4 beta int|m|^2)}
// from precomputed m values; |u| = 2|m| pointwise.
RecoveredField recover_u(const std::vector<double>& x_grid,
                         const std::vector<cplx>& m_values, double t,
                         double boundary_phase_t, double beta);

// Orchestrator: one RH solve per grid point (independent solves, scheduled
// across `workers` threads), then recover_u. Points whose solve fails are
// flagged, not fatal; `failed_fraction` reports the ratio.
struct ReconstructOptions {
  RHOptions rh;
  JumpBuildOptions jump;
  int workers = 1;
};

struct ReconstructReport {
  RecoveredField field;
  double failed_fraction = 0;
};

ReconstructReport reconstruct_field(const SpectralSet& set,
                                    const std::vector<double>& x_grid,
                                    double t, double boundary_phase_t,
                                    const ReconstructOptions& opts = {});

}  // namespace kehl
