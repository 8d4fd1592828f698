#pragma once

#include <functional>
#include <vector>

#include "kehl/types.hpp"

namespace kehl {

// Time-domain reference solver for
//   i u_t + u_xx - 2|u|^2 u + 4 beta^2 |u|^4 u + 4 i beta (|u|^2)_x u = 0
// on [0, x_max] with Dirichlet control at x=0 and a homogeneous far wall.
struct EvolutionConfig {
  double beta = 0.25;
  double x_max = 40.0;
  int nx = 801;                     // grid points including both walls
  double dt = 0.01;
  double t_max = 1.0;
  std::function<cplx(double)> dirichlet;  // null -> zero Dirichlet
  double scheme_tolerance = 1e-12;  // fixed-point stop per step
  int max_fixed_point_iters = 60;
  double decay_floor = 1e-12;
  double contamination_factor = 100.0;  // error if |u(x_max-)| exceeds
                                        // factor*decay_floor (0 disables)
  // absorbing layer near the far wall (width as a fraction of x_max,
  // strength sigma_max); 0 width disables
  double sponge_width_frac = 0.0;
  double sponge_strength = 2.0;

  std::vector<double> snapshot_times;
};

struct FieldSnapshot {
  double t = 0;
  std::vector<double> x_grid;
  std::vector<cplx> u;
  double mass = 0;        // int |u|^2 dx
  cplx g0{}, g1{};        // boundary value and one-sided 4th-order u_x(0)
};

struct EvolveObserver {
  // called once with the initial state and after every accepted step
  std::function<void(double t, const std::vector<double>& x,
                     const std::vector<cplx>& u)>
      on_step;
};

// Per-step boundary-trace collector (dense traces without storing fields).
struct TraceCollector {
  std::vector<double> t;
  std::vector<cplx> g0, g1;
  EvolveObserver observer();
};

std::vector<FieldSnapshot> evolve(const std::vector<cplx>& u0,
                                  const EvolutionConfig& config,
                                  const EvolveObserver* observer = nullptr);

// Boundary traces sampled on the snapshot times; g1 via the one-sided
// 4th-order stencil. Throws ResolutionError if the stencil looks
// under-resolved (5-point vs 7-point estimates disagree beyond tol).
struct Traces {
  std::vector<double> t;
  std::vector<cplx> g0, g1;
};
Traces extract_traces(const std::vector<FieldSnapshot>& snaps,
                      double stencil_tol = 1e-3);

// g1 estimate from a single field; exposed for the polynomial-injection test.
cplx boundary_derivative(const std::vector<double>& x,
                         const std::vector<cplx>& u, int points = 5);

}  // namespace kehl
