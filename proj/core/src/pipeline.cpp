#include "kehl/pipeline.hpp"

#include <cmath>

#include "kehl/quad.hpp"

namespace kehl {

cplx GaussianScenario::u0(double x) const {
  double z = (x - center) / width;
  return amp * std::exp(-z * z);
}

HalfLineData scenario_data(const GaussianScenario& s) {
  HalfLineData d;
  d.beta = s.beta;
  d.decay_floor = s.decay_floor;
  d.x_samples.resize(s.nx);
  d.u0.resize(s.nx);
  for (int i = 0; i < s.nx; ++i) {
    d.x_samples[i] = s.x_max * i / (s.nx - 1);
    d.u0[i] = s.u0(d.x_samples[i]);
  }
  const int nt = 41;
  d.t_samples.resize(nt);
  d.g0.assign(nt, 0.0);
  d.g1.assign(nt, 0.0);
  for (int i = 0; i < nt; ++i) d.t_samples[i] = 2.0 * i / (nt - 1);
  return d;
}

HalfLineData oracle_traces(const GaussianScenario& s,
                           const TraceRunConfig& cfg) {
  EvolutionConfig ec;
  ec.beta = s.beta;
  ec.x_max = cfg.x_max;
  ec.nx = cfg.nx;
  ec.dt = cfg.dt;
  ec.t_max = cfg.t_max;
  ec.contamination_factor = 0;  // hard wall by construction, no monitor
  ec.decay_floor = s.decay_floor;
  ec.snapshot_times = {0.0};
  std::vector<cplx> u0(cfg.nx);
  for (int i = 0; i < cfg.nx; ++i)
    u0[i] = s.u0(cfg.x_max * i / (cfg.nx - 1));
  u0.front() = 0.0;
  u0.back() = 0.0;
  TraceCollector coll;
  auto obs = coll.observer();
  auto snaps = evolve(u0, ec, &obs);

  HalfLineData d;
  d.beta = s.beta;
  d.decay_floor = s.decay_floor;
  d.x_samples = snaps.at(0).x_grid;
  d.u0 = snaps.at(0).u;
  d.t_samples = coll.t;
  d.g0 = coll.g0;
  d.g1 = coll.g1;
  return d;
}

DirectReflection::DirectReflection(const HalfLineData& data) : data_(data) {
  phase_ = make_gauge_phase(data_);
  u1_ = assemble_u1(data_, phase_);
  u2_ = make_u2_data(data_, phase_);
  vopts_.tolerance = 1e9;  // certified by det residuals instead
}

cplx DirectReflection::r1(double s) const {
  auto xy = scatter_x_at(data_, u1_, cplx(s, 0.0), vopts_);
  return std::conj(xy.b) / xy.a;
}

cplx DirectReflection::r(double s) const {
  auto xy = scatter_x_at(data_, u1_, cplx(s, 0.0), vopts_);
  auto tt = scatter_t_at(data_, u2_, cplx(s, 0.0), vopts_);
  cplx d = xy.a * std::conj(tt.A) - xy.b * std::conj(tt.B);
  if (std::abs(xy.a) < 1e-6 || std::abs(d) < 1e-6)
    throw ZeroAssumptionViolated("reflection: a or d vanishes on R-");
  return std::conj(xy.b) / xy.a - std::conj(tt.B) / (xy.a * d);
}

double DirectReflection::det_residual(double k) const {
  auto xy = scatter_x_at(data_, u1_, cplx(k, 0.0), vopts_);
  auto tt = scatter_t_at(data_, u2_, cplx(k, 0.0), vopts_);
  double ds = std::abs(xy.a * std::conj(xy.a) - xy.b * std::conj(xy.b) - 1.0);
  double dS = std::abs(tt.A * std::conj(tt.A) - tt.B * std::conj(tt.B) - 1.0);
  return std::max(ds, dS);
}

RayComparison compare_asymptotics(const GaussianScenario& s,
                                  const HalfLineData& traced,
                                  const RayRunConfig& cfg) {
  DirectReflection refl(traced);
  RayComparison out;
  out.params = make_asymptotic_params(refl.fn(), cfg.xi, s.beta, 0.0);

  EvolutionConfig ec;
  ec.beta = s.beta;
  ec.x_max = cfg.x_max;
  ec.nx = cfg.nx;
  ec.dt = cfg.dt;
  ec.t_max = cfg.t_max;
  ec.contamination_factor = 0;
  ec.sponge_width_frac = 0.2;
  ec.sponge_strength = 0.5;
  std::vector<cplx> u0(cfg.nx);
  for (int i = 0; i < cfg.nx; ++i)
    u0[i] = s.u0(cfg.x_max * i / (cfg.nx - 1));
  u0.front() = 0.0;
  u0.back() = 0.0;

  double next_t = cfg.t_start;
  EvolveObserver ray;
  ray.on_step = [&](double t, const std::vector<double>& x,
                    const std::vector<cplx>& u) {
    if (t + 1e-9 < next_t) return;
    next_t += cfg.sample_dt;
    double xq = cfg.xi * t;
    double dx = x[1] - x[0];
    size_t i = std::min<size_t>(size_t(xq / dx), u.size() - 3);
    size_t i0 = (i == 0) ? 0 : i - 1;
    // 4-point Lagrange interpolation at the ray position
    cplx val = 0;
    for (int a = 0; a < 4; ++a) {
      double num = 1, den = 1;
      for (int b = 0; b < 4; ++b)
        if (a != b) {
          num *= xq - x[i0 + b];
          den *= x[i0 + a] - x[i0 + b];
        }
      val += u[i0 + a] * num / den;
    }
    out.t.push_back(t);
    out.u.push_back(val);
  };
  ec.snapshot_times = {};
  evolve(u0, ec, &ray);

  const double target = std::sqrt(0.5 * out.params.nu);
  std::vector<double> lt, lerr, tp, pr;
  for (size_t i = 0; i < out.t.size(); ++i) {
    double t = out.t[i];
    auto v = evaluate_asymptotic(out.params, t);
    double rel = std::abs(std::sqrt(t) * std::abs(out.u[i]) - target) / target;
    double presid = std::arg(out.u[i] * std::exp(-iu * v.alpha));
    out.rel_err.push_back(rel);
    out.phase_resid.push_back(presid);
    if (t >= cfg.t_min_fit) {
      lt.push_back(std::log(t));
      lerr.push_back(rel);
      tp.push_back(t);
      pr.push_back(presid);
      out.final_rel = rel;
    }
  }

  // binned-RMS log-log fit of the relative modulus error
  const int nb = 12;
  std::vector<double> bx, by;
  double llo = std::log(cfg.t_min_fit), lhi = std::log(cfg.t_max);
  for (int b = 0; b < nb; ++b) {
    double lo = llo + (lhi - llo) * b / nb, hi = llo + (lhi - llo) * (b + 1) / nb;
    double acc = 0;
    int c = 0;
    for (size_t i = 0; i < lt.size(); ++i)
      if (lt[i] >= lo && lt[i] < hi) {
        acc += lerr[i] * lerr[i];
        ++c;
      }
    if (c) {
      bx.push_back(0.5 * (lo + hi));
      by.push_back(0.5 * std::log(acc / c));
    }
  }
  out.decay_slope = -fit_line(bx, by).slope;

  // unwrapped residual phase over the second half of the window: secular
  // drift from bin means, oscillation span from the raw series
  double prev = 0, acc = 0;
  bool first = true;
  double pmin = 1e300, pmax = -1e300;
  const double t_half = 0.5 * cfg.t_max;
  const int nb2 = 10;
  std::vector<double> bins(nb2, 0.0);
  std::vector<int> cnt(nb2, 0);
  for (size_t i = 0; i < tp.size(); ++i) {
    if (tp[i] < t_half) continue;
    double p = pr[i];
    if (first) {
      acc = p;
      first = false;
    } else {
      double dphi = p - prev;
      while (dphi > pi) dphi -= 2.0 * pi;
      while (dphi < -pi) dphi += 2.0 * pi;
      acc += dphi;
    }
    prev = p;
    pmin = std::min(pmin, acc);
    pmax = std::max(pmax, acc);
    int b = std::min(nb2 - 1, int((tp[i] - t_half) / (cfg.t_max - t_half) * nb2));
    bins[b] += acc;
    cnt[b]++;
  }
  if (cnt.front() && cnt.back())
    out.drift_e2e =
        std::abs(bins[nb2 - 1] / cnt[nb2 - 1] - bins[0] / cnt[0]);
  out.drift_span = (pmax > pmin) ? pmax - pmin : 0.0;
  return out;
}

}  // namespace kehl
