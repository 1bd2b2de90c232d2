#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace siegel {

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;

inline constexpr cplx kI{0.0, 1.0};

/// Default absolute tolerance for algebraic identities.
inline constexpr double kAlgebraTol = 1e-10;

/// Raised when operand shapes do not match the owning form.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a point or height lies outside the region where an object is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotInCone : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CalibrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace siegel
