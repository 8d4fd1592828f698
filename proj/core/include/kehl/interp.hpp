#pragma once

#include <vector>

#include "kehl/types.hpp"

namespace kehl {

// Not-a-knot cubic spline through (x_i, y_i), complex-valued.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(std::vector<double> x, std::vector<cplx> y);
  cplx operator()(double x) const;
  bool empty() const { return x_.empty(); }
  double x_min() const { return x_.front(); }
  double x_max() const { return x_.back(); }

 private:
  std::vector<double> x_;
  std::vector<cplx> y_, c1_, c2_, c3_;  // piecewise cubic coefficients
};

}  // namespace kehl
