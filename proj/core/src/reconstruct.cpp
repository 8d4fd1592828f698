#include "kehl/reconstruct.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "kehl/interp.hpp"
#include "kehl/quad.hpp"

namespace kehl {

RecoveredField recover_u(const std::vector<double>& x_grid,
                         const std::vector<cplx>& m_values, double t,
                         double boundary_phase_t, double beta) {
  if (x_grid.size() != m_values.size())
    throw ConfigError("recover_u: grid/m size mismatch");
  RecoveredField f;
  f.t = t;
  f.x = x_grid;
  f.m = m_values;
  f.phases.boundary_phase_t = boundary_phase_t;
  if (x_grid.size() >= 5) {
    // |m|^2 integrated on a spline-refined grid (m is smooth on the solve
    // grid; refinement buys two orders in the cumulative quadrature without
    // extra RH solves)
    const int refine = 4;
    CubicSpline ms(x_grid, m_values);
    std::vector<double> xr, m2r;
    for (size_t i = 0; i + 1 < x_grid.size(); ++i)
      for (int j = 0; j < refine; ++j) {
        double x = x_grid[i] +
                   (x_grid[i + 1] - x_grid[i]) * double(j) / refine;
        xr.push_back(x);
        m2r.push_back(std::norm(ms(x)));
      }
    xr.push_back(x_grid.back());
    m2r.push_back(std::norm(m_values.back()));
    auto cum = cumsimpson(xr, m2r);
    f.phases.m_x_integral.resize(x_grid.size());
    for (size_t i = 0; i < x_grid.size(); ++i)
      f.phases.m_x_integral[i] = cum[i * refine];
  } else {
    std::vector<double> m2(m_values.size());
    for (size_t i = 0; i < m_values.size(); ++i)
      m2[i] = std::norm(m_values[i]);
    f.phases.m_x_integral = cumsimpson(x_grid, m2);
  }
  f.u.resize(m_values.size());
  for (size_t i = 0; i < m_values.size(); ++i) {
    double total = boundary_phase_t - 4.0 * beta * f.phases.m_x_integral[i];
    f.u[i] = 2.0 * iu * m_values[i] * std::exp(2.0 * iu * total);
  }
  return f;
}

ReconstructReport reconstruct_field(const SpectralSet& set,
                                    const std::vector<double>& x_grid,
                                    double t, double boundary_phase_t,
                                    const ReconstructOptions& opts) {
  MainJumpBuilder builder(set);
  const size_t n = x_grid.size();
  std::vector<cplx> m(n, cplx(0));
  std::vector<double> res(n, std::numeric_limits<double>::quiet_NaN());
  std::vector<char> ok(n, 0);

  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        auto built = builder.build(x_grid[i], t, opts.jump);
        auto sol = solve_rh(built.contour, opts.rh);
        m[i] = sol.m_coeff;
        res[i] = sol.residual;
        ok[i] = 1;
      } catch (const std::exception&) {
        // flagged below
      }
    }
  };
  int workers = std::max(1, opts.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  size_t failures = 0;
  for (char c : ok)
    if (!c) ++failures;

  ReconstructReport rep;
  rep.failed_fraction = double(failures) / double(std::max<size_t>(n, 1));
  rep.field = recover_u(x_grid, m, t, boundary_phase_t, set.beta);
  rep.field.residual = res;
  rep.field.ok = ok;
  return rep;
}

}  // namespace kehl
