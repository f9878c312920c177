#pragma once

#include <string>
#include <vector>

#include "bsvd/common.hpp"

namespace bsvd {

enum class KernelFamily { Matern, Gaussian, Exponential, Identity };

std::string family_name(KernelFamily f);
KernelFamily family_from_name(const std::string& name);

/// A correlation kernel family plus hyperparameters. The Matern is the
/// conventional form 2^{1-nu}/Gamma(nu) (sqrt(2 nu) d / rho)^nu K_nu(...),
/// under which nu = 0.5 gives exp(-d/rho) and nu -> inf gives the squared
/// exponential exp(-d^2 / (2 rho^2)). The Gaussian family uses exp(-d^2/rho).
struct KernelSpec {
  KernelFamily family = KernelFamily::Identity;
  double nu = 0.0;   // Matern smoothness, > 0
  double rho = 0.0;  // length-scale, > 0 for all but Identity

  static KernelSpec matern(double nu, double rho);
  static KernelSpec gaussian(double rho);
  static KernelSpec exponential(double rho);
  static KernelSpec identity();

  KernelSpec with_rho(double new_rho) const;
  void validate() const;
};

/// Ordered list of d-dimensional coordinates.
class CoordinateSet {
 public:
  CoordinateSet() = default;
  explicit CoordinateSet(Matrix points);  // n x d, one point per row

  /// n points equally spaced on [lo, hi] inclusive of endpoints.
  static CoordinateSet linspace(double lo, double hi, Eigen::Index n);

  Eigen::Index size() const { return points_.rows(); }
  Eigen::Index dim() const { return points_.cols(); }
  const Matrix& points() const { return points_; }
  double distance(Eigen::Index i, Eigen::Index j) const;
  double max_distance() const;  // domain diameter

 private:
  Matrix points_;
};

/// C(s, t) for one coordinate pair; symmetric, C(s, s) = 1.
double kernel_value(const KernelSpec& spec, const Eigen::Ref<const Vector>& s,
                    const Eigen::Ref<const Vector>& t);

double kernel_value_at_distance(const KernelSpec& spec, double dist);

/// n x n correlation matrix over the coordinate set; exactly symmetric with
/// unit diagonal. Identity family returns I_n exactly.
Matrix correlation_matrix(const KernelSpec& spec, const CoordinateSet& coords);

/// Cholesky factor of an SPD matrix with escalating diagonal jitter
/// (1e-10 doubling up to 1e-6) for near-singular smooth kernels.
struct SpdCholesky {
  Matrix L;           // lower triangular
  double jitter = 0;  // epsilon actually added to the diagonal

  double log_det() const;                 // of the jittered matrix
  Vector solve(const Vector& b) const;    // (L L')^{-1} b
  Matrix inverse() const;
};

SpdCholesky robust_cholesky(const Matrix& mat);

namespace detail {
/// General-nu Matern through the modified Bessel function K_nu; the
/// half-integer closed forms are used by kernel_value when 2 nu is odd.
double matern_bessel(double dist, double nu, double rho);
double matern_half_integer(double dist, int p, double nu, double rho);
}  // namespace detail

}  // namespace bsvd
