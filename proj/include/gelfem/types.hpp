#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace gelfem {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point state or parameter set outside the admissible domain of the gel
/// energy (e.g. total volume at or below the dry network).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Reference-to-parent Jacobian is not positive at a quadrature point.
class InvertedElementError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Newton iteration or continuation failed to reach equilibrium.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// The reduced stiffness is rank deficient, typically missing constraints.
class SingularSystemError : public Error {
 public:
  using Error::Error;
};

/// Malformed model file or command-line input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace gelfem
