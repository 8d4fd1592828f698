#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/LU>

namespace kehl {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline const cplx iu{0.0, 1.0};

inline const char* version_string() { return "kehl 0.1.0"; }

// Error hierarchy. The CLI maps these onto exit codes:
// ConfigError -> 2, ResolutionError -> 3, InvariantViolation -> 4.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ResolutionError : std::runtime_error {
  double achieved = 0.0;
  ResolutionError(const std::string& msg, double residual)
      : std::runtime_error(msg), achieved(residual) {}
};
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Assumption: a(k) != 0 on closure(D1 u D2), d(k) != 0 on closure(D2).
struct ZeroAssumptionViolated : InvariantViolation {
  using InvariantViolation::InvariantViolation;
};
struct CoverageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace kehl
