// Copyright 2026 The ptcoul Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace ptcoul {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Violated precondition or a request with no admissible answer.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative method hit its iteration cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two eigenvalues closer than the separation threshold (exceptional-point
/// vicinity). Carries the offending pair.
class DegeneracyError : public DomainError {
 public:
  DegeneracyError(const std::string& what, std::size_t first, std::size_t second, double gap)
      : DomainError(what), first_(first), second_(second), gap_(gap) {}

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }
  double gap() const noexcept { return gap_; }

 private:
  std::size_t first_;
  std::size_t second_;
  double gap_;
};

}  // namespace ptcoul
