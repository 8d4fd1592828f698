#include "kehl/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "kehl/quad.hpp"

namespace kehl {

static std::vector<double> symmetric_grid(double kmax, int n) {
  // odd n -> includes 0 exactly
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = -kmax + 2.0 * kmax * i / (n - 1);
  g[(n - 1) / 2] = 0.0;
  return g;
}

std::vector<cplx> default_d1_probes(int count, double min_im_k2,
                                    unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ur(0.0, 1.0);
  std::vector<cplx> probes;
  probes.reserve(count);
  while (int(probes.size()) < count) {
    double rad = 0.3 * std::pow(8.0 / 0.3, ur(rng));   // log-spaced in [0.3,8]
    double ang = (0.1 + 0.8 * ur(rng)) * 0.5 * pi;     // inside D1
    cplx k = std::polar(rad, ang);
    if ((k * k).imag() >= min_im_k2) probes.push_back(k);
  }
  return probes;
}

SpectralSet compute_spectral_set(const HalfLineData& data,
                                 const SpectralGrids& grids,
                                 const VolterraOptions& vopts) {
  data.validate();
  GaugePhase phase = make_gauge_phase(data);
  U1Matrix u1 = assemble_u1(data, phase);
  U2Data u2 = make_u2_data(data, phase);

  SpectralSet s;
  s.beta = data.beta;

  auto ab = [&](cplx k) {
    auto r = scatter_x_at(data, u1, k, vopts);
    s.scatter_err_estimate = std::max(s.scatter_err_estimate, r.err_estimate);
    return std::pair<cplx, cplx>(r.a, r.b);
  };
  auto AB = [&](cplx k) {
    auto r = scatter_t_at(data, u2, k, vopts);
    s.scatter_err_estimate = std::max(s.scatter_err_estimate, r.err_estimate);
    s.trace_tail_warning = std::max(s.trace_tail_warning, r.tail_warning);
    return std::pair<cplx, cplx>(r.A, r.B);
  };

  s.k_real = symmetric_grid(grids.k_max_real, grids.n_real);
  s.a_re.resize(s.k_real.size());
  s.b_re.resize(s.k_real.size());
  s.A_re.resize(s.k_real.size());
  s.B_re.resize(s.k_real.size());
  for (size_t i = 0; i < s.k_real.size(); ++i) {
    std::tie(s.a_re[i], s.b_re[i]) = ab(cplx(s.k_real[i], 0.0));
    std::tie(s.A_re[i], s.B_re[i]) = AB(cplx(s.k_real[i], 0.0));
  }

  s.kappa = symmetric_grid(grids.kappa_max, grids.n_kappa);
  s.A_im.resize(s.kappa.size());
  s.B_im.resize(s.kappa.size());
  for (size_t i = 0; i < s.kappa.size(); ++i)
    std::tie(s.A_im[i], s.B_im[i]) = AB(cplx(0.0, s.kappa[i]));
  for (double kap : s.kappa)
    if (kap >= 0.0) s.kappa_pos.push_back(kap);
  s.a_ipos.resize(s.kappa_pos.size());
  s.b_ipos.resize(s.kappa_pos.size());
  for (size_t i = 0; i < s.kappa_pos.size(); ++i)
    std::tie(s.a_ipos[i], s.b_ipos[i]) = ab(cplx(0.0, s.kappa_pos[i]));

  // radial fan in closure(C+) for a,b
  for (int ir = 0; ir < grids.fan_radii; ++ir) {
    double rad = grids.fan_r_min *
                 std::pow(grids.fan_r_max / grids.fan_r_min,
                          double(ir) / (grids.fan_radii - 1));
    for (int ia = 0; ia < grids.fan_angles; ++ia) {
      double ang = pi * double(ia) / (grids.fan_angles - 1);
      s.cloud_ab_k.push_back(std::polar(rad, ang));
    }
  }
  for (cplx k : s.cloud_ab_k) {
    auto [av, bv] = ab(k);
    s.cloud_a.push_back(av);
    s.cloud_b.push_back(bv);
  }
  // fan in closure(D1 u D3) for A,B
  for (int ir = 0; ir < grids.fan_radii; ++ir) {
    double rad = grids.fan_r_min *
                 std::pow(grids.fan_r_max / grids.fan_r_min,
                          double(ir) / (grids.fan_radii - 1));
    for (int ia = 0; ia < grids.fan_angles; ++ia) {
      double ang = 0.5 * pi * double(ia) / (grids.fan_angles - 1);
      s.cloud_AB_k.push_back(std::polar(rad, ang));
      s.cloud_AB_k.push_back(std::polar(rad, ang + pi));
    }
  }
  for (cplx k : s.cloud_AB_k) {
    auto [Av, Bv] = AB(k);
    s.cloud_A.push_back(Av);
    s.cloud_B.push_back(Bv);
  }

  s.probe_d1_k =
      default_d1_probes(grids.probe_count, grids.probe_min_im_k2, grids.seed);
  for (cplx k : s.probe_d1_k) {
    auto [av, bv] = ab(k);
    auto [Av, Bv] = AB(k);
    s.probe_a.push_back(av);
    s.probe_b.push_back(bv);
    s.probe_A.push_back(Av);
    s.probe_B.push_back(Bv);
  }
  return s;
}

void derive_reflections(SpectralSet& s, double zero_threshold) {
  const size_t n = s.k_real.size();
  if (n == 0 || s.a_re.size() != n)
    throw CoverageError("derive_reflections: real-axis block missing");
  s.r1_re.resize(n);
  s.k_neg.clear();
  s.d_neg.clear();
  s.gamma_neg.clear();
  s.r_neg.clear();
  s.r2_neg.clear();
  for (size_t i = 0; i < n; ++i) {
    if (std::abs(s.a_re[i]) < zero_threshold)
      throw ZeroAssumptionViolated("a(k) vanishes on the real axis");
    // real k: conj(f(conj k)) = conj(f(k))
    s.r1_re[i] = std::conj(s.b_re[i]) / s.a_re[i];
    if (s.k_real[i] <= 0.0) {
      cplx d = s.a_re[i] * std::conj(s.A_re[i]) -
               s.b_re[i] * std::conj(s.B_re[i]);
      if (std::abs(d) < zero_threshold)
        throw ZeroAssumptionViolated("d(k) vanishes on R-");
      cplx gam = -std::conj(s.B_re[i]) / (s.a_re[i] * d);
      cplx r = s.r1_re[i] + gam;
      s.k_neg.push_back(s.k_real[i]);
      s.d_neg.push_back(d);
      s.gamma_neg.push_back(gam);
      s.r_neg.push_back(r);
      s.r2_neg.push_back(std::conj(r) / (1.0 - r * std::conj(r)));
    }
  }
  double sup_r = 0;
  for (auto& r : s.r_neg) sup_r = std::max(sup_r, std::abs(r));
  if (sup_r >= 1.0)
    throw InvariantViolation("sup |r| >= 1 on R- (subcritical bound violated)");

  // Gamma on i R+ : k = i kap, conj k = -i kap
  const size_t m = s.kappa_pos.size();
  s.d_ipos.resize(m);
  s.gamma_ipos.resize(m);
  for (size_t i = 0; i < m; ++i) {
    double kap = s.kappa_pos[i];
    // locate B(-i kap) on the kappa grid (grid is symmetric by construction)
    auto it = std::lower_bound(s.kappa.begin(), s.kappa.end(), -kap - 1e-12);
    size_t j = size_t(it - s.kappa.begin());
    if (j >= s.kappa.size() || std::abs(s.kappa[j] + kap) > 1e-9)
      throw CoverageError("derive_reflections: kappa grid not symmetric");
    cplx Ac = std::conj(s.A_im[j]), Bc = std::conj(s.B_im[j]);
    cplx a = s.a_ipos[i], b = s.b_ipos[i];
    if (std::abs(a) < zero_threshold)
      throw ZeroAssumptionViolated("a(k) vanishes on i R+");
    cplx d = a * Ac - b * Bc;
    if (std::abs(d) < zero_threshold)
      throw ZeroAssumptionViolated("d(k) vanishes on i R+");
    s.d_ipos[i] = d;
    s.gamma_ipos[i] = -Bc / (a * d);
  }
}

double global_relation_residual(const SpectralSet& s) {
  double sup = 0;
  for (size_t i = 0; i < s.probe_d1_k.size(); ++i)
    sup = std::max(sup, std::abs(s.probe_B[i] * s.probe_a[i] -
                                 s.probe_A[i] * s.probe_b[i]));
  return sup;
}

double global_relation_residual(const HalfLineData& data,
                                const std::vector<cplx>& probes,
                                const VolterraOptions& vopts) {
  GaugePhase phase = make_gauge_phase(data);
  U1Matrix u1 = assemble_u1(data, phase);
  U2Data u2 = make_u2_data(data, phase);
  double sup = 0;
  for (cplx k : probes) {
    if ((k * k).imag() <= 0 || k.real() <= 0 || k.imag() <= 0)
      throw DomainError("global relation probe not strictly inside D1");
    auto xy = scatter_x_at(data, u1, k, vopts);
    auto t = scatter_t_at(data, u2, k, vopts);
    sup = std::max(sup, std::abs(t.B * xy.a - t.A * xy.b));
  }
  return sup;
}

ZeroScanReport scan_zeros(const HalfLineData& data, double k_box,
                          double zero_threshold, const VolterraOptions& vopts) {
  GaugePhase phase = make_gauge_phase(data);
  U1Matrix u1 = assemble_u1(data, phase);
  U2Data u2 = make_u2_data(data, phase);
  auto a_of = [&](cplx k) { return scatter_x_at(data, u1, k, vopts).a; };
  auto d_of = [&](cplx k) {
    auto xy = scatter_x_at(data, u1, k, vopts);
    auto t = scatter_t_at(data, u2, std::conj(k), vopts);
    return xy.a * std::conj(t.A) - xy.b * std::conj(t.B);
  };

  ZeroScanReport rep;
  rep.min_abs_a = 1e300;
  rep.min_abs_d = 1e300;
  // modulus scan on a coarse lattice of the closed regions
  const int nscan = 21;
  for (int i = 0; i < nscan; ++i)
    for (int j = 0; j < nscan; ++j) {
      double re = -k_box + 2.0 * k_box * i / (nscan - 1);
      double im = k_box * j / (nscan - 1);
      rep.min_abs_a = std::min(rep.min_abs_a, std::abs(a_of(cplx(re, im))));
      if (re <= 0.0)
        rep.min_abs_d = std::min(rep.min_abs_d, std::abs(d_of(cplx(re, im))));
    }
  if (rep.min_abs_a < zero_threshold)
    throw ZeroAssumptionViolated("zero scan: |a| below threshold");
  if (rep.min_abs_d < zero_threshold)
    throw ZeroAssumptionViolated("zero scan: |d| below threshold");

  std::vector<cplx> rect_a = {cplx(-k_box, 0), cplx(k_box, 0),
                              cplx(k_box, k_box), cplx(-k_box, k_box),
                              cplx(-k_box, 0)};
  rep.winding_a = winding_number(a_of, rect_a);
  std::vector<cplx> rect_d = {cplx(-k_box, 0), cplx(0, 0), cplx(0, k_box),
                              cplx(-k_box, k_box), cplx(-k_box, 0)};
  rep.winding_d = winding_number(d_of, rect_d);
  if (rep.winding_a != 0)
    throw ZeroAssumptionViolated("argument principle: a has zeros in D1 u D2");
  if (rep.winding_d != 0)
    throw ZeroAssumptionViolated("argument principle: d has zeros in D2");
  return rep;
}

SpectralEvaluator::SpectralEvaluator(const SpectralSet& s) {
  if (!s.has_reflections())
    throw CoverageError("SpectralEvaluator: call derive_reflections first");
  std::vector<cplx> r1v = s.r1_re;
  r1_ = CubicSpline(s.k_real, r1v);
  r_ = CubicSpline(s.k_neg, s.r_neg);
  r2_ = CubicSpline(s.k_neg, s.r2_neg);
  gam_ = CubicSpline(s.kappa_pos, s.gamma_ipos);
}

cplx SpectralEvaluator::r1(double k) const { return r1_(k); }
cplx SpectralEvaluator::r(double k) const {
  if (k > 1e-12) throw DomainError("r(k) requested for k > 0");
  return r_(std::min(k, 0.0));
}
cplx SpectralEvaluator::r2(double k) const {
  if (k > 1e-12) throw DomainError("r2(k) requested for k > 0");
  return r2_(std::min(k, 0.0));
}
cplx SpectralEvaluator::gamma_iaxis(double kap) const {
  if (kap < -1e-12) throw DomainError("Gamma(i kap) requested for kap < 0");
  return gam_(std::max(kap, 0.0));
}

}  // namespace kehl
