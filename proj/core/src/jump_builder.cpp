#include "kehl/jump_builder.hpp"

#include <cmath>

namespace kehl {

MainJumpBuilder::MainJumpBuilder(const SpectralSet& set) : eval_(set) {
  gamma_neg_ = CubicSpline(set.k_neg, set.gamma_neg);
  k_cov_ = eval_.k_real_max();
  kap_cov_ = eval_.kappa_max();
}

cplx MainJumpBuilder::phase(cplx k, double x, double t) const {
  return 2.0 * iu * (k * x + 2.0 * k * k * t);
}

Mat2 MainJumpBuilder::j1_formula(double k, double x, double t) const {
  cplx g = (k <= 0) ? gamma_neg_(k) : eval_.gamma_iaxis(k);
  Mat2 j = Mat2::Identity();
  j(1, 0) = g * std::exp(phase(k, x, t));
  return j;
}
Mat2 MainJumpBuilder::j3_formula(double k, double x, double t) const {
  cplx g = (k <= 0) ? gamma_neg_(k) : eval_.gamma_iaxis(k);
  Mat2 j = Mat2::Identity();
  j(0, 1) = -std::conj(g) * std::exp(-phase(k, x, t));
  return j;
}
Mat2 MainJumpBuilder::j2_formula(double k, double x, double t) const {
  // composed from the same splines as J1/J4/J3 so the Eq. 3.4 identity is
  // algebraic; the sampled r itself is checked against r1 + Gamma separately
  cplx r = eval_.r1(k) + gamma_neg_(k);
  cplx e = std::exp(phase(k, x, t));
  Mat2 j;
  j(0, 0) = 1.0;
  j(0, 1) = -std::conj(r) / e;
  j(1, 0) = r * e;
  j(1, 1) = 1.0 - r * std::conj(r);
  return j;
}
Mat2 MainJumpBuilder::j4_formula(double k, double x, double t) const {
  cplx r1 = eval_.r1(k);
  cplx e = std::exp(phase(k, x, t));
  Mat2 j;
  j(0, 0) = 1.0 - r1 * std::conj(r1);
  j(0, 1) = std::conj(r1) / e;
  j(1, 0) = -r1 * e;
  j(1, 1) = 1.0;
  return j;
}

namespace {

double ray_truncation(const std::function<double(double)>& bound, double s_max,
                      double tol) {
  // walk outward on a fine grid; keep the last point where the bound matters
  const int n = 600;
  double r = 0.0;
  for (int i = 1; i <= n; ++i) {
    double s = s_max * i / n;
    if (bound(s) >= tol) r = s;
  }
  if (r == 0.0) r = 0.05 * s_max;        // jump negligible everywhere
  return std::min(1.2 * r + 0.02 * s_max, s_max);
}

}  // namespace

BuiltContour MainJumpBuilder::build(double x, double t,
                                    const JumpBuildOptions& opts) const {
  if (x < 0 || t < 0) throw DomainError("build_jump: x, t must be >= 0");
  BuiltContour out;

  auto ephi = [this, x, t](cplx k) { return std::exp(phase(k, x, t)); };

  // truncation radii from the sampled coefficient decay and phase damping
  out.radius_real = ray_truncation(
      [&](double s) {
        double v = std::max(std::abs(eval_.r1(s)), std::abs(eval_.r1(-s)));
        double rr = std::abs(eval_.r(-s));
        return std::max({v, rr, rr * rr});
      },
      k_cov_, opts.trunc_tol);
  out.radius_ipos = ray_truncation(
      [&](double s) {
        return std::abs(eval_.gamma_iaxis(s)) * std::abs(ephi(cplx(0, s)));
      },
      kap_cov_, opts.trunc_tol);
  out.radius_ineg = ray_truncation(
      [&](double s) {
        return std::abs(eval_.gamma_iaxis(s)) /
               std::abs(ephi(cplx(0, -s)));
      },
      kap_cov_, opts.trunc_tol);

  SpectralEvaluator ev = eval_;  // copy for capture lifetime safety

  RHSegment ipos;  // i R+ : from i*R down to 0
  ipos.z0 = cplx(0, out.radius_ipos);
  ipos.z1 = 0;
  ipos.grade_at_z0 = false;
  ipos.name = "iR+";
  ipos.jump = [ev, x, t](cplx k) {
    Mat2 j = Mat2::Identity();
    j(1, 0) = ev.gamma_iaxis(k.imag()) *
              std::exp(2.0 * iu * (k * x + 2.0 * k * k * t));
    return j;
  };
  RHSegment ineg;  // i R- : from -i*R up to 0
  ineg.z0 = cplx(0, -out.radius_ineg);
  ineg.z1 = 0;
  ineg.grade_at_z0 = false;
  ineg.name = "iR-";
  ineg.jump = [ev, x, t](cplx k) {
    Mat2 j = Mat2::Identity();
    j(0, 1) = -std::conj(ev.gamma_iaxis(-k.imag())) *
              std::exp(-2.0 * iu * (k * x + 2.0 * k * k * t));
    return j;
  };
  RHSegment rpos;  // R+ : 0 -> R
  rpos.z0 = 0;
  rpos.z1 = out.radius_real;
  rpos.grade_at_z0 = true;
  rpos.name = "R+";
  rpos.jump = [ev, x, t](cplx k) {
    cplx r1 = ev.r1(k.real());
    cplx e = std::exp(2.0 * iu * (k * x + 2.0 * k * k * t));
    Mat2 j;
    j(0, 0) = 1.0 - r1 * std::conj(r1);
    j(0, 1) = std::conj(r1) / e;
    j(1, 0) = -r1 * e;
    j(1, 1) = 1.0;
    return j;
  };
  RHSegment rneg;  // R- : 0 -> -R
  rneg.z0 = 0;
  rneg.z1 = -out.radius_real;
  rneg.grade_at_z0 = true;
  rneg.name = "R-";
  rneg.jump = [ev, x, t](cplx k) {
    cplx r = ev.r(k.real());
    cplx e = std::exp(2.0 * iu * (k * x + 2.0 * k * k * t));
    Mat2 j;
    j(0, 0) = 1.0;
    j(0, 1) = -std::conj(r) / e;
    j(1, 0) = r * e;
    j(1, 1) = 1.0 - r * std::conj(r);
    return j;
  };

  for (RHSegment* seg : {&ipos, &ineg, &rpos, &rneg}) {
    seg->first_panel = opts.first_panel;
    seg->growth = opts.growth;
    seg->max_panel = opts.max_panel;
  }
  rpos.local_freq = [x, t](cplx k) {
    return 2.0 * std::abs(x + 4.0 * k.real() * t);
  };
  rneg.local_freq = rpos.local_freq;
  ipos.local_freq = [x, t](cplx k) {
    return 2.0 * std::hypot(x, 4.0 * std::abs(k.imag()) * t);
  };
  ineg.local_freq = ipos.local_freq;

  out.contour.segments = {ipos, ineg, rpos, rneg};

  // Eq. 3.4 consistency: J2 = J1 J4^{-1} J3 at sample points on R-, plus
  // coherence of the sampled r against r1 + Gamma
  double res = 0, coh = 0;
  for (double k : {-1e-4, -0.37, -1.1, -0.5 * out.radius_real}) {
    if (k < -k_cov_) continue;
    Mat2 lhs = j2_formula(k, x, t);
    Mat2 rhs = j1_formula(k, x, t) * j4_formula(k, x, t).inverse() *
               j3_formula(k, x, t);
    res = std::max(res, (lhs - rhs).cwiseAbs().maxCoeff());
    coh = std::max(coh, std::abs(eval_.r(k) - eval_.r1(k) - gamma_neg_(k)));
  }
  out.consistency_residual = res;
  if (res > opts.consistency_tol) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", res);
    throw InvariantViolation(
        std::string("build_jump: J2 != J1 J4^{-1} J3 (residual ") + buf + ")");
  }
  if (coh > 1e-6)
    throw InvariantViolation(
        "build_jump: sampled r incoherent with r1 + Gamma");
  return out;
}

ContourRH build_cross_contour(cplx q, double radius, double inner,
                              double growth) {
  if (std::abs(q) >= 1.0) throw DomainError("cross: |q| must be < 1");
  double nu = -std::log(1.0 - std::norm(q)) / (2.0 * pi);
  cplx qb = std::conj(q);
  double om = 1.0 - std::norm(q);

  auto zpow = [nu](cplx z, double sgn) {
    // z^{sgn * 2 i nu}, principal branch
    return std::exp(sgn * 2.0 * iu * nu * std::log(z));
  };
  auto gauss_factor = [](cplx z, double sgn) {
    return std::exp(sgn * 0.5 * iu * z * z);
  };

  ContourRH c;
  auto add_ray = [&](double ang, JumpFn j, const char* name) {
    RHSegment s;
    s.z0 = 0;
    s.z1 = std::polar(radius, ang);
    s.grade_at_z0 = true;
    s.first_panel = inner;
    s.growth = growth;
    s.jump = std::move(j);
    s.name = name;
    // e^{±i z^2/2} oscillates/decays at rate |z|; the z^{±2i nu} log
    // oscillation near 0 is resolved by the geometric grading itself
    s.local_freq = [](cplx z) { return std::abs(z); };
    c.segments.push_back(std::move(s));
  };
  add_ray(pi / 4,
          [=](cplx z) {
            Mat2 j = Mat2::Identity();
            j(1, 0) = -q * gauss_factor(z, +1) * zpow(z, -1);
            return j;
          },
          "X1");
  add_ray(3 * pi / 4,
          [=](cplx z) {
            Mat2 j = Mat2::Identity();
            j(0, 1) = -(qb / om) * gauss_factor(z, -1) * zpow(z, +1);
            return j;
          },
          "X2");
  add_ray(-3 * pi / 4,
          [=](cplx z) {
            Mat2 j = Mat2::Identity();
            j(1, 0) = (q / om) * gauss_factor(z, +1) * zpow(z, -1);
            return j;
          },
          "X3");
  add_ray(-pi / 4,
          [=](cplx z) {
            Mat2 j = Mat2::Identity();
            j(0, 1) = qb * gauss_factor(z, -1) * zpow(z, +1);
            return j;
          },
          "X4");
  return c;
}

}  // namespace kehl
