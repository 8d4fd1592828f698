#pragma once

#include <functional>
#include <vector>

#include "kehl/types.hpp"

namespace kehl {

struct GaussRule {
  std::vector<double> x;  // nodes on [-1,1]
  std::vector<double> w;
};

// Gauss-Legendre rule, cached per order.
const GaussRule& gauss_legendre(int n);

// Legendre P_0..P_{n-1} at x.
std::vector<double> legendre_p_all(int n, double x);
std::vector<cplx> legendre_p_all(int n, cplx z);

// Cumulative trapezoid of complex samples on a (possibly nonuniform) grid;
// result[0] = 0.
std::vector<cplx> cumtrapz(const std::vector<double>& x,
                           const std::vector<cplx>& f);
std::vector<double> cumtrapz(const std::vector<double>& x,
                             const std::vector<double>& f);

// Cumulative Simpson on a uniform grid (odd intervals fall back to a
// trapezoid-corrected last cell). result[0] = 0.
std::vector<double> cumsimpson(const std::vector<double>& x,
                               const std::vector<double>& f);

double trapz(const std::vector<double>& x, const std::vector<double>& f);

// Finite-difference weights for the m-th derivative at x0 from arbitrary
// nodes (Fornberg's algorithm).
std::vector<double> fornberg_weights(double x0, const std::vector<double>& xs,
                                     int m);

// Least-squares slope/intercept of y vs x.
struct LineFit {
  double slope = 0, intercept = 0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Winding number of f along the closed polyline (divided by 2*pi). Steps are
// refined until every phase increment is < pi/2; throws ResolutionError if a
// segment cannot be resolved (f passes too close to 0).
int winding_number(const std::function<cplx(cplx)>& f,
                   const std::vector<cplx>& polyline, int max_depth = 24);

// Adaptive Gauss-Kronrod-free refinement: integrate f on [a,b] by halving
// panels of Gauss-Legendre order n until the last halving changes the result
// by less than tol (absolute). Used by the independent quadrature oracles.
cplx integrate_adaptive(const std::function<cplx(double)>& f, double a,
                        double b, double tol, int order = 15,
                        int max_depth = 18);

// Geometrically graded panel edges from `from` toward `to` (grading resolves
// an integrable singularity at `to`); closest panel has size |to-from|*r^(n-1).
std::vector<double> graded_edges(double from, double to, int n_panels,
                                 double ratio);

}  // namespace kehl
