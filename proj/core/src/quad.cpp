#include "kehl/quad.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace kehl {

static GaussRule make_gauss(int n) {
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  // Newton iteration on P_n with Chebyshev initial guesses.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.x[i] = -x;
    r.x[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    r.w[i] = w;
    r.w[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.x[n / 2] = 0.0;
  return r;
}

const GaussRule& gauss_legendre(int n) {
  static std::map<int, GaussRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_gauss(n)).first;
  return it->second;
}

template <typename T>
static std::vector<T> p_all(int n, T x) {
  std::vector<T> p(n);
  if (n > 0) p[0] = T(1);
  if (n > 1) p[1] = x;
  for (int j = 2; j < n; ++j)
    p[j] = ((2.0 * j - 1.0) * x * p[j - 1] - (j - 1.0) * p[j - 2]) / double(j);
  return p;
}

std::vector<double> legendre_p_all(int n, double x) { return p_all(n, x); }
std::vector<cplx> legendre_p_all(int n, cplx z) { return p_all(n, z); }

template <typename T>
static std::vector<T> cumtrapz_impl(const std::vector<double>& x,
                                    const std::vector<T>& f) {
  std::vector<T> out(x.size(), T(0));
  for (size_t i = 1; i < x.size(); ++i)
    out[i] = out[i - 1] + 0.5 * (x[i] - x[i - 1]) * (f[i] + f[i - 1]);
  return out;
}

std::vector<cplx> cumtrapz(const std::vector<double>& x,
                           const std::vector<cplx>& f) {
  return cumtrapz_impl(x, f);
}
std::vector<double> cumtrapz(const std::vector<double>& x,
                             const std::vector<double>& f) {
  return cumtrapz_impl(x, f);
}

std::vector<double> cumsimpson(const std::vector<double>& x,
                               const std::vector<double>& f) {
  const size_t n = x.size();
  std::vector<double> out(n, 0.0);
  if (n < 2) return out;
  bool uniform = true;
  double h0 = x[1] - x[0];
  for (size_t i = 1; i + 1 < n && uniform; ++i)
    if (std::abs((x[i + 1] - x[i]) - h0) > 1e-10 * std::abs(h0))
      uniform = false;
  if (!uniform || n < 3) return cumtrapz_impl(x, f);
  for (size_t i = 1; i < n; ++i) {
    if (i + 1 < n) {
      // Simpson over [x_{i-1}, x_{i+1}] split at x_i (uniform h assumed);
      // take the left half via the standard composite identity.
      double h = x[i] - x[i - 1];
      out[i] = out[i - 1] + h * (5.0 * f[i - 1] + 8.0 * f[i] - f[i + 1]) / 12.0;
    } else {
      double h = x[i] - x[i - 1];
      out[i] = out[i - 1] + h * (-f[i - 2] + 8.0 * f[i - 1] + 5.0 * f[i]) / 12.0;
    }
  }
  return out;
}

double trapz(const std::vector<double>& x, const std::vector<double>& f) {
  double s = 0;
  for (size_t i = 1; i < x.size(); ++i)
    s += 0.5 * (x[i] - x[i - 1]) * (f[i] + f[i - 1]);
  return s;
}

std::vector<double> fornberg_weights(double x0, const std::vector<double>& xs,
                                     int m) {
  const int n = int(xs.size());
  std::vector<std::vector<double>> c(n, std::vector<double>(m + 1, 0.0));
  double c1 = 1.0;
  double c4 = xs[0] - x0;
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    int mn = std::min(i, m);
    double c2 = 1.0;
    double c5 = c4;
    c4 = xs[i] - x0;
    for (int j = 0; j < i; ++j) {
      double c3 = xs[i] - xs[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k)
        c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = c[i][m];
  return w;
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = double(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  LineFit f;
  double den = n * sxx - sx * sx;
  f.slope = (n * sxy - sx * sy) / den;
  f.intercept = (sy - f.slope * sx) / n;
  return f;
}

static double arg_diff(cplx a, cplx b) {
  // principal argument of b/a
  return std::arg(b / a);
}

int winding_number(const std::function<cplx(cplx)>& f,
                   const std::vector<cplx>& polyline, int max_depth) {
  double total = 0;
  for (size_t i = 0; i + 1 < polyline.size(); ++i) {
    // refine each edge until phase increments are small
    std::function<double(cplx, cplx, cplx, cplx, int)> seg =
        [&](cplx z0, cplx z1, cplx f0, cplx f1, int depth) -> double {
      if (f0 == cplx(0) || f1 == cplx(0))
        throw ResolutionError("winding: zero on path", 0.0);
      double d = arg_diff(f0, f1);
      if (std::abs(d) < pi / 2) return d;
      if (depth >= max_depth)
        throw ResolutionError("winding: unresolved phase step", std::abs(d));
      cplx zm = 0.5 * (z0 + z1);
      cplx fm = f(zm);
      return seg(z0, zm, f0, fm, depth + 1) + seg(zm, z1, fm, f1, depth + 1);
    };
    total += seg(polyline[i], polyline[i + 1], f(polyline[i]),
                 f(polyline[i + 1]), 0);
  }
  return int(std::lround(total / (2 * pi)));
}

static cplx gauss_panel(const std::function<cplx(double)>& f, double a,
                        double b, const GaussRule& g) {
  cplx s = 0;
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  for (size_t i = 0; i < g.x.size(); ++i) s += g.w[i] * f(c + h * g.x[i]);
  return s * h;
}

cplx integrate_adaptive(const std::function<cplx(double)>& f, double a,
                        double b, double tol, int order, int max_depth) {
  const GaussRule& g = gauss_legendre(order);
  std::function<cplx(double, double, cplx, int)> rec =
      [&](double lo, double hi, cplx whole, int depth) -> cplx {
    double mid = 0.5 * (lo + hi);
    cplx left = gauss_panel(f, lo, mid, g);
    cplx right = gauss_panel(f, mid, hi, g);
    if (std::abs(left + right - whole) < tol || depth >= max_depth)
      return left + right;
    return rec(lo, mid, left, depth + 1) + rec(mid, hi, right, depth + 1);
  };
  return rec(a, b, gauss_panel(f, a, b, g), 0);
}

std::vector<double> graded_edges(double from, double to, int n_panels,
                                 double ratio) {
  // consecutive panel sizes scale by `ratio` moving from `from` toward `to`;
  // ratio < 1 clusters the edges at `to`, ratio > 1 at `from`
  std::vector<double> sizes(n_panels);
  double len = 0, sz = 1;
  for (int i = 0; i < n_panels; ++i) {
    sizes[i] = sz;
    len += sz;
    sz *= ratio;
  }
  std::vector<double> edges(n_panels + 1);
  edges[0] = from;
  double acc = 0;
  for (int i = 0; i < n_panels; ++i) {
    acc += sizes[i];
    edges[i + 1] = from + (to - from) * (acc / len);
  }
  edges.back() = to;
  return edges;
}

}  // namespace kehl
