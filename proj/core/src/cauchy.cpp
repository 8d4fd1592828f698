#include "kehl/cauchy.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace kehl {

Panel make_panel(cplx z0, cplx z1, int order, int segment_id) {
  Panel p;
  p.z0 = z0;
  p.z1 = z1;
  p.center = 0.5 * (z0 + z1);
  p.half = 0.5 * (z1 - z0);
  p.order = order;
  p.segment_id = segment_id;
  const auto& g = gauss_legendre(order);
  p.nodes.resize(order);
  for (int i = 0; i < order; ++i) p.nodes[i] = p.center + p.half * g.x[i];
  return p;
}

std::vector<double> legendre_q_cut(int n, double x) {
  std::vector<double> q(n);
  double q0 = 0.5 * std::log((1.0 + x) / (1.0 - x));
  if (n > 0) q[0] = q0;
  if (n > 1) q[1] = x * q0 - 1.0;
  for (int j = 2; j < n; ++j)
    q[j] = ((2.0 * j - 1.0) * x * q[j - 1] - (j - 1.0) * q[j - 2]) / double(j);
  return q;
}

std::vector<cplx> legendre_q_off(int n, cplx z) {
  std::vector<cplx> q(n);
  cplx q0 = 0.5 * std::log((z + 1.0) / (z - 1.0));
  if (n > 0) q[0] = q0;
  if (n == 1) return q;
  cplx s = std::sqrt(z - 1.0) * std::sqrt(z + 1.0);
  cplx rho_small = z - s;  // the |.| < 1 root of the characteristic equation
  if (std::abs(rho_small) > 1.0) rho_small = 1.0 / rho_small;
  if (std::abs(rho_small) > 0.67) {
    // near the cut the forward recurrence amplifies by at most
    // (1/0.67)^n — harmless — while the continued fraction stalls
    q[1] = z * q0 - 1.0;
    for (int j = 2; j < n; ++j)
      q[j] = ((2.0 * j - 1.0) * z * q[j - 1] - (j - 1.0) * q[j - 2]) /
             double(j);
    return q;
  }
  // descending continued fraction for the ratios r_j = Q_j / Q_{j-1}
  // (Q decays like rho_small^j, so backward evaluation is stable)
  std::vector<cplx> ratios(n, 0.0);
  cplx r = rho_small;
  for (int j = n - 1 + 40; j >= 1; --j) {
    r = double(j) / ((2.0 * j + 1.0) * z - double(j + 1) * r);
    if (j < n) ratios[j] = r;
  }
  for (int j = 1; j < n; ++j) q[j] = ratios[j] * q[j - 1];
  return q;
}

const std::vector<std::vector<double>>& legendre_coeff_matrix(int order) {
  static std::map<int, std::vector<std::vector<double>>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) {
    const auto& g = gauss_legendre(order);
    std::vector<std::vector<double>> a(order, std::vector<double>(order));
    for (int j = 0; j < order; ++j) {
      auto p = legendre_p_all(order, g.x[j]);
      for (int n = 0; n < order; ++n)
        a[n][j] = (2.0 * n + 1.0) / 2.0 * g.w[j] * p[n];
    }
    it = cache.emplace(order, std::move(a)).first;
  }
  return it->second;
}

std::vector<cplx> cauchy_row(const Panel& p, cplx target, int side) {
  const int n = p.order;
  // local coordinate of the target
  cplx w = (target - p.center) / p.half;
  std::vector<cplx> qv(n);
  if (std::abs(w.imag()) < 1e-13 && std::abs(w.real()) < 1.0 - 1e-12) {
    double x = w.real();
    auto qc = legendre_q_cut(n, x);
    auto pv = legendre_p_all(n, x);
    // Q_n(x ± i0) = Q_n(x) ∓ (i pi/2) P_n(x); plus side is Im w > 0
    cplx corr = (side >= 0) ? -iu * (0.5 * pi) : iu * (0.5 * pi);
    for (int j = 0; j < n; ++j) qv[j] = qc[j] + corr * pv[j];
  } else {
    qv = legendre_q_off(n, w);
  }
  // C[P_n](w) = -Q_n(w)/(pi i); assemble the row against nodal values
  const auto& A = legendre_coeff_matrix(n);
  std::vector<cplx> row(n, 0.0);
  const cplx fac = -1.0 / (pi * iu);
  for (int m = 0; m < n; ++m) {
    cplx qm = fac * qv[m];
    for (int j = 0; j < n; ++j) row[j] += qm * A[m][j];
  }
  return row;
}

cplx panel_interp(const Panel& p, const std::vector<cplx>& nodal, double w) {
  const auto& A = legendre_coeff_matrix(p.order);
  auto pv = legendre_p_all(p.order, w);
  cplx val = 0;
  for (int m = 0; m < p.order; ++m) {
    cplx am = 0;
    for (int j = 0; j < p.order; ++j) am += A[m][j] * nodal[j];
    val += am * pv[m];
  }
  return val;
}

}  // namespace kehl
