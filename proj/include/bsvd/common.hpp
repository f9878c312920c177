#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace bsvd {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Caller passed invalid input (bad dimensions, out-of-range parameters,
/// malformed files). Maps to a usage error at the CLI.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A numerical operation failed beyond recovery (Cholesky after max jitter,
/// rank-deficient input). Maps to a nonzero exit with diagnostics.
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw InputError(msg);
}

}  // namespace bsvd
