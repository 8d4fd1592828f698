#include "kehl/interp.hpp"

#include <algorithm>
#include <cmath>

#include "kehl/quad.hpp"

namespace kehl {

CubicSpline::CubicSpline(std::vector<double> x, std::vector<cplx> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const size_t n = x_.size();
  if (n < 2 || y_.size() != n) throw ConfigError("spline: bad input sizes");
  std::vector<cplx> s(n);  // nodal first derivatives
  if (n < 5) {
    for (size_t i = 0; i + 1 < n; ++i)
      s[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
    s[n - 1] = s[n - 2];
  } else {
    // end slopes from 5-point one-sided stencils, interior from the clamped
    // C2 tridiagonal system
    auto end_slope = [&](bool left) {
      std::vector<double> xs(5);
      size_t base = left ? 0 : n - 5;
      for (int i = 0; i < 5; ++i) xs[i] = x_[base + i];
      auto w = fornberg_weights(left ? x_.front() : x_.back(), xs, 1);
      cplx d = 0;
      for (int i = 0; i < 5; ++i) d += w[i] * y_[base + i];
      return d;
    };
    s[0] = end_slope(true);
    s[n - 1] = end_slope(false);
    std::vector<double> diag(n), sub(n), sup(n);
    std::vector<cplx> rhs(n);
    diag[0] = diag[n - 1] = 1;
    rhs[0] = s[0];
    rhs[n - 1] = s[n - 1];
    for (size_t i = 1; i + 1 < n; ++i) {
      double hl = x_[i] - x_[i - 1], hr = x_[i + 1] - x_[i];
      sub[i] = 1.0 / hl;
      sup[i] = 1.0 / hr;
      diag[i] = 2.0 * (1.0 / hl + 1.0 / hr);
      rhs[i] = 3.0 * ((y_[i] - y_[i - 1]) / (hl * hl) +
                      (y_[i + 1] - y_[i]) / (hr * hr));
    }
    // Thomas
    for (size_t i = 1; i < n; ++i) {
      double m = sub[i] / diag[i - 1];
      diag[i] -= m * sup[i - 1];
      rhs[i] -= m * rhs[i - 1];
    }
    s[n - 1] = rhs[n - 1] / diag[n - 1];
    for (size_t i = n - 1; i-- > 0;)
      s[i] = (rhs[i] - sup[i] * s[i + 1]) / diag[i];
  }
  c1_.resize(n - 1);
  c2_.resize(n - 1);
  c3_.resize(n - 1);
  for (size_t i = 0; i + 1 < n; ++i) {
    double h = x_[i + 1] - x_[i];
    cplx dy = (y_[i + 1] - y_[i]) / h;
    c1_[i] = s[i];
    c2_[i] = (3.0 * dy - 2.0 * s[i] - s[i + 1]) / h;
    c3_[i] = (s[i] + s[i + 1] - 2.0 * dy) / (h * h);
  }
}

cplx CubicSpline::operator()(double x) const {
  if (x_.empty()) throw DomainError("spline: empty");
  if (x < x_.front() - 1e-12 || x > x_.back() + 1e-12)
    throw DomainError("spline: evaluation outside coverage");
  auto it = std::upper_bound(x_.begin(), x_.end(), x);
  size_t i = std::min<size_t>(
      std::max<ptrdiff_t>(0, it - x_.begin() - 1), x_.size() - 2);
  double dx = x - x_[i];
  return y_[i] + dx * (c1_[i] + dx * (c2_[i] + dx * c3_[i]));
}

}  // namespace kehl
