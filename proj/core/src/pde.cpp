#include "kehl/pde.hpp"

#include <algorithm>
#include <cmath>

#include "kehl/quad.hpp"

namespace kehl {

namespace {

// N(u) = -2i|u|^2 u + 4i beta^2 |u|^4 u - 4 beta (|u|^2)_x u - i sigma(x) u,
// with (|u|^2)_x by centered differences (one-sided at the walls).
void nonlinear_term(const std::vector<cplx>& u, double beta, double dx,
                    const std::vector<double>& sigma, std::vector<cplx>& out) {
  const size_t n = u.size();
  out.resize(n);
  for (size_t i = 0; i < n; ++i) {
    double a2 = std::norm(u[i]);
    double da2;
    if (i == 0)
      da2 = (std::norm(u[1]) - std::norm(u[0])) / dx;
    else if (i == n - 1)
      da2 = (std::norm(u[n - 1]) - std::norm(u[n - 2])) / dx;
    else
      da2 = (std::norm(u[i + 1]) - std::norm(u[i - 1])) / (2.0 * dx);
    out[i] = (-2.0 * iu * a2 + 4.0 * iu * beta * beta * a2 * a2 -
              4.0 * beta * da2 - iu * sigma[i]) *
             u[i];
  }
}

// complex tridiagonal Thomas solve with constant off-diagonals
void thomas_const(cplx off, const std::vector<cplx>& diag,
                  std::vector<cplx>& rhs) {
  const size_t n = diag.size();
  static thread_local std::vector<cplx> d;
  d = diag;
  for (size_t i = 1; i < n; ++i) {
    cplx m = off / d[i - 1];
    d[i] -= m * off;
    rhs[i] -= m * rhs[i - 1];
  }
  rhs[n - 1] /= d[n - 1];
  for (size_t i = n - 1; i-- > 0;) rhs[i] = (rhs[i] - off * rhs[i + 1]) / d[i];
}

}  // namespace

std::vector<FieldSnapshot> evolve(const std::vector<cplx>& u0,
                                  const EvolutionConfig& cfg,
                                  const EvolveObserver* observer) {
  const int n = cfg.nx;
  if (int(u0.size()) != n) throw ConfigError("evolve: u0 size != nx");
  if (cfg.dt <= 0 || cfg.t_max <= 0 || n < 8)
    throw ConfigError("evolve: bad dt/t_max/nx");
  const double dx = cfg.x_max / (n - 1);
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = i * dx;

  auto dirichlet = [&](double t) -> cplx {
    return cfg.dirichlet ? cfg.dirichlet(t) : cplx(0.0);
  };
  if (std::abs(u0.front() - dirichlet(0.0)) >
      1e-6 * std::max(1.0, std::abs(u0.front())) + 1e-9)
    throw ConfigError("evolve: u0(0) incompatible with dirichlet(0)");

  std::vector<double> sigma(n, 0.0);
  if (cfg.sponge_width_frac > 0) {
    double x0 = cfg.x_max * (1.0 - cfg.sponge_width_frac);
    for (int i = 0; i < n; ++i)
      if (x[i] > x0) {
        double s = (x[i] - x0) / (cfg.x_max - x0);
        sigma[i] = cfg.sponge_strength * s * s;
      }
  }

  // interior Crank-Nicolson system: (I - i dt/2 D2) acting on nodes 1..n-2
  const int ni = n - 2;
  const cplx lam = iu * cfg.dt / (2.0 * dx * dx);
  std::vector<cplx> diag(ni, 1.0 + 2.0 * lam);
  const cplx off = -lam;

  std::vector<cplx> u = u0, unew(n), nl_old(n), nl_new(n), rhs(ni);
  std::vector<FieldSnapshot> snaps;
  std::vector<double> want = cfg.snapshot_times;
  std::sort(want.begin(), want.end());
  size_t wi = 0;

  auto take_snapshot = [&](double t) {
    FieldSnapshot s;
    s.t = t;
    s.x_grid = x;
    s.u = u;
    std::vector<double> a2(n);
    for (int i = 0; i < n; ++i) a2[i] = std::norm(u[i]);
    s.mass = trapz(x, a2);
    s.g0 = u[0];
    s.g1 = boundary_derivative(x, u);
    snaps.push_back(std::move(s));
  };
  while (wi < want.size() && want[wi] <= 1e-14) {
    take_snapshot(0.0);
    ++wi;
  }
  if (observer && observer->on_step) observer->on_step(0.0, x, u);

  const long nsteps = long(std::ceil(cfg.t_max / cfg.dt - 1e-9));
  double t = 0.0;
  for (long step = 0; step < nsteps; ++step) {
    double tn = t + cfg.dt;
    nonlinear_term(u, cfg.beta, dx, sigma, nl_old);
    // fixed point on u^{n+1}
    unew = u;
    double change = 1e300;
    int it = 0;
    for (; it < cfg.max_fixed_point_iters; ++it) {
      nonlinear_term(unew, cfg.beta, dx, sigma, nl_new);
      cplx bc0 = dirichlet(tn);
      for (int i = 1; i <= ni; ++i) {
        cplx lap_old = u[i - 1] - 2.0 * u[i] + u[i + 1];
        rhs[i - 1] = u[i] + lam * lap_old +
                     0.5 * cfg.dt * (nl_old[i] + nl_new[i]);
      }
      rhs[0] += lam * bc0;  // new-level boundary contributions
      // far wall is homogeneous Dirichlet: no contribution
      thomas_const(off, diag, rhs);
      change = 0;
      for (int i = 1; i <= ni; ++i)
        change = std::max(change, std::abs(rhs[i - 1] - unew[i]));
      unew[0] = bc0;
      for (int i = 1; i <= ni; ++i) unew[i] = rhs[i - 1];
      unew[n - 1] = 0.0;
      if (change < cfg.scheme_tolerance) break;
    }
    if (change >= cfg.scheme_tolerance && it >= cfg.max_fixed_point_iters)
      throw ResolutionError("evolve: fixed point did not converge at t=" +
                                std::to_string(tn),
                            change);
    u.swap(unew);
    t = tn;

    if (cfg.contamination_factor > 0) {
      double wall = std::abs(u[n - 2]);
      if (wall > cfg.contamination_factor * cfg.decay_floor)
        throw ResolutionError(
            "evolve: boundary reflection contamination at t=" +
                std::to_string(t),
            wall);
    }
    if (observer && observer->on_step) observer->on_step(t, x, u);
    while (wi < want.size() && want[wi] <= t + 1e-9) {
      take_snapshot(t);
      ++wi;
    }
  }
  return snaps;
}

EvolveObserver TraceCollector::observer() {
  EvolveObserver obs;
  obs.on_step = [this](double tt, const std::vector<double>& x,
                       const std::vector<cplx>& u) {
    t.push_back(tt);
    g0.push_back(u[0]);
    g1.push_back(boundary_derivative(x, u, 7));
  };
  return obs;
}

cplx boundary_derivative(const std::vector<double>& x,
                         const std::vector<cplx>& u, int points) {
  std::vector<double> xs(x.begin(), x.begin() + points);
  auto w = fornberg_weights(x[0], xs, 1);
  cplx d = 0;
  for (int i = 0; i < points; ++i) d += w[i] * u[i];
  return d;
}

Traces extract_traces(const std::vector<FieldSnapshot>& snaps,
                      double stencil_tol) {
  Traces tr;
  std::vector<double> dev(snaps.size());
  double gmax = 0;
  for (const auto& s : snaps) {
    tr.t.push_back(s.t);
    tr.g0.push_back(s.g0);
    cplx g1_5 = boundary_derivative(s.x_grid, s.u, 5);
    cplx g1_7 = boundary_derivative(s.x_grid, s.u, 7);
    dev[tr.g1.size()] = std::abs(g1_5 - g1_7);
    gmax = std::max(gmax, std::abs(g1_7));
    tr.g1.push_back(g1_7);
  }
  // the stencil is judged against the trace's dynamic range, not pointwise
  // (relative error on an exponentially small tail is meaningless)
  double scale = std::max(gmax, 1e-10);
  for (size_t i = 0; i < dev.size(); ++i)
    if (dev[i] > stencil_tol * scale)
      throw ResolutionError("extract_traces: stencil under-resolved at t=" +
                                std::to_string(tr.t[i]),
                            dev[i] / scale);
  return tr;
}

}  // namespace kehl
