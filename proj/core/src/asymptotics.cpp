#include "kehl/asymptotics.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "kehl/quad.hpp"
#include "kehl/special.hpp"

namespace kehl {

double compute_nu(cplx q) {
  double a2 = std::norm(q);
  if (a2 >= 1.0)
    throw DomainError("compute_nu: |q| >= 1 (subcritical bound violated)");
  return -std::log(1.0 - a2) / (2.0 * pi);
}

ChiQuadrature build_chi_quadrature(const ReflectionFn& r, double k0,
                                   const ChiOptions& opts) {
  if (k0 >= 0) throw DomainError("chi quadrature: k0 must be negative");
  double s_min = k0 - 1.0;
  while (s_min > opts.s_min_cap && std::abs(r(s_min)) > opts.tail_abs)
    s_min -= 0.5;

  ChiQuadrature q;
  q.k0 = k0;
  q.s_min = s_min;

  // regular panels on [s_min, k0 - w], graded toward the endpoint on the
  // rest; the innermost graded panel becomes the semi-analytic sliver
  double w = std::min(0.5, 0.25 * (k0 - s_min));
  std::vector<double> edges = graded_edges(s_min, k0 - w, opts.panels_regular,
                                           1.0);
  auto gr = graded_edges(k0 - w, k0, opts.panels_graded, opts.grade_ratio);
  edges.insert(edges.end(), gr.begin() + 1, gr.end() - 1);
  q.sliver = k0 - edges.back();

  const auto& g = gauss_legendre(opts.order);
  for (size_t e = 0; e + 1 < edges.size(); ++e) {
    double c = 0.5 * (edges[e] + edges[e + 1]);
    double h = 0.5 * (edges[e + 1] - edges[e]);
    for (size_t j = 0; j < g.x.size(); ++j) {
      q.nodes.push_back(c + h * g.x[j]);
      q.weights.push_back(h * g.w[j]);
    }
  }

  const double hh = opts.fd_step;
  q.sigma.resize(q.nodes.size());
  q.sigma_prime.resize(q.nodes.size());
  for (size_t i = 0; i < q.nodes.size(); ++i) {
    double s = q.nodes[i];
    cplx rv = r(s);
    double om = 1.0 - std::norm(rv);
    if (om <= 0.0)
      throw DomainError("chi quadrature: 1-|r|^2 <= 0 on the ray");
    q.sigma[i] = std::log(om);
    cplx rp;
    if (s + 2.0 * hh <= 0.0) {
      rp = (r(s - 2 * hh) - 8.0 * r(s - hh) + 8.0 * r(s + hh) - r(s + 2 * hh)) /
           (12.0 * hh);
    } else {
      std::vector<double> xs{s - 4 * hh, s - 3 * hh, s - 2 * hh, s - hh, s};
      auto wts = fornberg_weights(s, xs, 1);
      rp = 0;
      for (int j = 0; j < 5; ++j) rp += wts[j] * r(xs[j]);
    }
    q.sigma_prime[i] = -2.0 * std::real(std::conj(rv) * rp) / om;
  }
  cplx rk0 = r(k0);
  double om0 = 1.0 - std::norm(rk0);
  if (om0 <= 0.0) throw DomainError("chi quadrature: 1-|r(k0)|^2 <= 0");
  q.sigma_k0 = std::log(om0);
  q.nu = -q.sigma_k0 / (2.0 * pi);
  {
    std::vector<double> xs{k0 - 4 * hh, k0 - 3 * hh, k0 - 2 * hh, k0 - hh, k0};
    auto wts = fornberg_weights(k0, xs, 1);
    cplx rp = 0;
    for (int j = 0; j < 5; ++j) rp += wts[j] * r(xs[j]);
    q.sigma_prime_k0 = -2.0 * std::real(std::conj(rk0) * rp) / om0;
  }
  q.sigma_fn = [r](double s) { return std::log(1.0 - std::norm(r(s))); };
  return q;
}

// int_0^h ln(c+u) du = (c+h) Log(c+h) - c Log c - h  (principal branch; the
// segment c + [0,h] stays off (-infty,0] for all uses below)
static cplx log_cell(cplx c, double h) {
  cplx a = (c + h) * std::log(c + h) - cplx(h);
  if (c != cplx(0)) a -= c * std::log(c);
  return a;
}

cplx compute_chi(const ChiQuadrature& q, cplx k) {
  cplx acc = 0;
  for (size_t i = 0; i < q.nodes.size(); ++i)
    acc += q.weights[i] * std::log(k - q.nodes[i]) * q.sigma_prime[i];
  acc += q.sigma_prime_k0 * log_cell(k - q.k0, q.sliver);
  return -acc / (2.0 * pi * iu);
}

cplx compute_delta_integral(const ChiQuadrature& q, cplx k) {
  if (std::abs(k.imag()) < 1e-9 && k.real() <= q.k0)
    throw DomainError("delta: k on the cut; use compute_delta_boundary");
  cplx acc = 0;
  for (size_t i = 0; i < q.nodes.size(); ++i)
    acc += q.weights[i] * q.sigma[i] / (q.nodes[i] - k);
  // sliver: sigma ~ sigma(k0) - sigma'(k0) u with s = k0 - u
  cplx c = k - q.k0;
  double h = q.sliver;
  cplx i0 = std::log(c + h) - std::log(c);           // int du/(c+u)
  cplx i1 = cplx(h) - c * i0;                        // int u du/(c+u)
  acc += -q.sigma_k0 * i0 + q.sigma_prime_k0 * i1;
  return std::exp(acc / (2.0 * pi * iu));
}

cplx compute_delta_factored(const ChiQuadrature& q, cplx k) {
  if (std::abs(k.imag()) < 1e-9 && k.real() <= q.k0)
    throw DomainError("delta: k on the cut; use compute_delta_boundary");
  return std::pow(k - q.k0, iu * q.nu) * std::exp(compute_chi(q, k));
}

DeltaBoundary compute_delta_boundary(const ChiQuadrature& q, double k) {
  if (k > q.k0)
    throw DomainError("delta boundary values requested for k > k0");
  if (k < q.s_min + 0.2)
    throw DomainError("delta boundary value too close to the tail cutoff");
  double w = std::min({0.2, 0.45 * (q.k0 - k), 0.45 * (k - q.s_min)});
  if (w <= 0) throw DomainError("delta boundary: degenerate window");
  double sig_k = q.sigma_fn(k);

  // symmetric window: PV of the constant part vanishes, the rest is smooth
  const auto& g = gauss_legendre(20);
  double win = 0;
  for (size_t j = 0; j < g.x.size(); ++j) {
    double s = k + w * g.x[j];
    win += w * g.w[j] * (q.sigma_fn(s) - sig_k) / (s - k);
  }

  // dedicated panels outside the window (the global node set cannot be
  // subset per-point): refined toward the window edges and toward k0
  double outer = 0;
  auto add_block = [&](const std::vector<double>& edges) {
    const auto& gg = gauss_legendre(16);
    for (size_t e = 0; e + 1 < edges.size(); ++e) {
      double c = 0.5 * (edges[e] + edges[e + 1]);
      double hh = 0.5 * (edges[e + 1] - edges[e]);
      for (size_t j = 0; j < gg.x.size(); ++j) {
        double s = c + hh * gg.x[j];
        outer += hh * gg.w[j] * q.sigma_fn(s) / (s - k);
      }
    }
  };
  add_block(graded_edges(q.s_min, k - w, 18, 0.7));
  double mid = q.k0 - 0.5 * std::min(0.5, q.k0 - k - w);
  add_block(graded_edges(k + w, mid, 14, 1.45));
  auto right = graded_edges(mid, q.k0, 22, 0.5);
  double sliver = q.k0 - right[right.size() - 2];
  right.pop_back();
  add_block(right);
  // analytic sliver at k0 (all-real: k < k0 - w)
  {
    double c = k - q.k0;  // negative, |c| > sliver
    double i0 = std::log(std::abs(c + sliver)) - std::log(std::abs(c));
    double i1 = sliver - c * i0;
    outer += -q.sigma_k0 * i0 + q.sigma_prime_k0 * i1;
  }
  cplx pv = cplx(win + outer) / (2.0 * pi * iu);
  DeltaBoundary b;
  b.plus = std::exp(pv - 0.5 * sig_k);   // limit from below the axis
  b.minus = std::exp(pv + 0.5 * sig_k);  // limit from above
  return b;
}

cplx compute_beta_x(cplx q) {
  if (std::abs(q) >= 1.0) throw DomainError("beta_x: |q| must be < 1");
  if (q == cplx(0)) return 0.0;  // limiting case nu -> 0
  double nu = compute_nu(q);
  double phase = -0.75 * pi - std::arg(q) + arg_gamma_at_i_nu(nu);
  return std::sqrt(nu) * std::exp(iu * phase);
}

AsymptoticParams make_asymptotic_params(const ReflectionFn& r, double xi,
                                        double beta, double boundary_phase_t,
                                        const ChiOptions& opts) {
  if (xi <= 0) throw DomainError("asymptotics: xi must be in (0, N]");
  AsymptoticParams p;
  p.xi = xi;
  p.k0 = -0.25 * xi;
  p.beta = beta;
  p.boundary_phase_t = boundary_phase_t;
  p.q = r(p.k0);
  if (std::abs(p.q) == 0.0) {
    p.degenerate = true;
    return p;
  }
  p.nu = compute_nu(p.q);
  ChiQuadrature quad = build_chi_quadrature(r, p.k0, opts);
  p.chi_k0 = compute_chi(quad, cplx(p.k0));
  double i_chi = 0;
  for (size_t i = 0; i < quad.nodes.size(); ++i)
    i_chi += quad.weights[i] * std::log(p.k0 - quad.nodes[i]) *
             quad.sigma_prime[i];
  // endpoint sliver: int_0^h ln(u) du = h(ln h - 1)
  i_chi += quad.sigma_prime_k0 * quad.sliver * (std::log(quad.sliver) - 1.0);
  p.i_chi = i_chi;
  p.i_tail = integrate_adaptive(
                 [&](double s) -> cplx {
                   return std::log(1.0 - std::norm(r(-s)));
                 },
                 0.0, -p.k0, 1e-12)
                 .real();
  return p;
}

AsymptoticValue evaluate_asymptotic(const AsymptoticParams& p, double t) {
  if (t <= 0) throw DomainError("evaluate_asymptotic: t must be positive");
  AsymptoticValue v;
  if (p.degenerate) {
    v.degenerate = true;
    v.u_a = 0;
    return v;
  }
  v.alpha = -0.75 * pi - std::arg(p.q) + arg_gamma_at_i_nu(p.nu) -
            p.nu * std::log(8.0 * t) + 4.0 * p.k0 * p.k0 * t + p.i_chi / pi +
            (2.0 * p.beta / pi) * p.i_tail + 2.0 * p.boundary_phase_t;
  v.u_a = std::sqrt(0.5 * p.nu) * std::exp(iu * v.alpha);
  return v;
}

cplx InterpolantF0::operator()(cplx k) const {
  cplx w = 1.0 / (k + iu);
  cplx acc = 0;
  for (int j = 7; j >= 0; --j) acc = (acc + a[j]) * w;
  return acc;
}

GammaJet estimate_gamma_jet(const std::function<cplx(double)>& gamma_iaxis,
                            double window) {
  // Degree-14 least-squares polynomial on [0, window] sampled at clustered
  // (Chebyshev) points; endpoint derivatives read off the coefficients. More
  // noise-tolerant than a one-sided difference stencil at 4th order.
  const int deg = 14, ns = 64;
  Eigen::MatrixXcd A(ns, deg + 1);
  Eigen::VectorXcd b(ns);
  for (int i = 0; i < ns; ++i) {
    double tau = 0.5 * (1.0 - std::cos(pi * (i + 0.5) / ns));  // in (0,1)
    double kap = window * tau;
    b(i) = gamma_iaxis(kap);
    double p = 1.0;
    for (int m = 0; m <= deg; ++m) {
      A(i, m) = p;
      p *= tau;
    }
  }
  Eigen::VectorXcd c = A.colPivHouseholderQr().solve(b);
  GammaJet jet;
  double fact = 1.0, hpow = 1.0;
  for (int j = 0; j < 5; ++j) {
    if (j > 0) {
      fact *= j;
      hpow *= window;
    }
    // d^j/d kappa^j at 0 = j! c_j / window^j; then /(i^j j!) for the k-jet
    jet.p[j] = c(j) * fact / hpow / (std::pow(iu, j) * fact);
  }
  return jet;
}

GammaMoments fit_gamma_moments(const std::function<cplx(double)>& gamma_iaxis,
                               double kap_lo, double kap_hi, int n_samples) {
  // seven-term model; the extra terms absorb the truncation of the
  // inverse-power series so the leading moments come out unbiased
  const int nm = 7;
  Eigen::MatrixXcd A(n_samples, nm);
  Eigen::VectorXcd b(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    double kap = kap_lo * std::pow(kap_hi / kap_lo,
                                   double(i) / double(n_samples - 1));
    cplx k = iu * kap;
    double wgt = kap;
    cplx kk = 1.0;
    for (int j = 0; j < nm; ++j) {
      kk /= k;
      A(i, j) = wgt * kk;
    }
    b(i) = wgt * gamma_iaxis(kap);
  }
  Eigen::VectorXcd m = A.colPivHouseholderQr().solve(b);
  GammaMoments out;
  for (int j = 0; j < 3; ++j) out.m[j] = m(j);
  return out;
}

InterpolantF0 interpolant_f0(const GammaJet& jet, const GammaMoments& mom) {
  auto binom = [](int n, int k) {
    double r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(8, 8);
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(8);
  // Taylor conditions at 0: sum_j a_j (-1)^n C(j+n-1, n) i^{-(j+n)} = p_n
  for (int n = 0; n <= 4; ++n) {
    for (int j = 1; j <= 8; ++j)
      A(n, j - 1) = std::pow(-1.0, n) * binom(j + n - 1, n) *
                    std::pow(iu, -(j + n));
    rhs(n) = jet.p[n];
  }
  // inverse-moment conditions: coefficient of k^{-m} in 1/(k+i)^j is
  // C(m-1, j-1) (-i)^{m-j} for j <= m
  for (int m = 1; m <= 3; ++m) {
    for (int j = 1; j <= m; ++j)
      A(4 + m, j - 1) = binom(m - 1, j - 1) * std::pow(-iu, m - j);
    rhs(4 + m) = mom.m[m - 1];
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(A);
  if (qr.rank() < 8)
    throw ResolutionError("interpolant_f0: singular matching system", 0.0);
  Eigen::VectorXcd a = qr.solve(rhs);
  InterpolantF0 f;
  for (int j = 0; j < 8; ++j) f.a[j] = a(j);
  Eigen::VectorXcd res = A * a - rhs;
  f.residual_zero = res.head(5).cwiseAbs().maxCoeff();
  f.residual_inf = res.tail(3).cwiseAbs().maxCoeff();
  return f;
}

double remainder_exponent(const std::function<cplx(double)>& gamma_iaxis,
                          const InterpolantF0& f0, double lo, double hi,
                          int n) {
  std::vector<double> lx, ly;
  for (int i = 0; i < n; ++i) {
    double kap = lo * std::pow(hi / lo, double(i) / (n - 1));
    cplx f = gamma_iaxis(kap) - f0(iu * kap);
    if (std::abs(f) <= 0) continue;
    lx.push_back(std::log(kap));
    ly.push_back(std::log(std::abs(f)));
  }
  if (lx.size() < 4)
    throw ResolutionError("remainder_exponent: too few usable samples",
                          double(lx.size()));
  return fit_line(lx, ly).slope;
}

}  // namespace kehl
