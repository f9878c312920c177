#include "bsvd/stiefel.hpp"

#include <cmath>
#include <sstream>

namespace bsvd {

double BasisMatrix::orthonormality_gap() const {
  const Eigen::Index k = columns.cols();
  Matrix g = columns.transpose() * columns - Matrix::Identity(k, k);
  return g.cwiseAbs().maxCoeff();
}

Matrix generate_structured_orthonormal(Eigen::Index n, Eigen::Index k,
                                       const std::vector<Matrix>& omegas, Rng& rng) {
  require(k >= 1 && k <= n, "generate: need 1 <= k <= n");
  require(Eigen::Index(omegas.size()) == k, "generate: need one covariance per column");
  Matrix W(n, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    require(omegas[i].rows() == n && omegas[i].cols() == n, "generate: Omega_i must be n x n");
    SpdCholesky chol;
    try {
      chol = robust_cholesky(omegas[i]);
    } catch (const NumericalError& e) {
      throw InputError("generate: Omega_" + std::to_string(i + 1) +
                       " is not positive definite: " + e.what());
    }
    Vector z = chol.L * rng.normal_vector(n);
    // project off the span of the accepted columns; twice for numerical drift
    auto prev = W.leftCols(i);
    Vector x = z - prev * (prev.transpose() * z);
    x -= prev * (prev.transpose() * x);
    const double norm = x.norm();
    if (!(norm > 0) || !std::isfinite(norm))
      throw NumericalError("generate: degenerate projected draw at column " +
                           std::to_string(i + 1));
    W.col(i) = x / norm;
  }
  return W;
}

BasisMatrix generate_structured_orthonormal(Eigen::Index n, Eigen::Index k,
                                            const std::vector<Matrix>& omegas,
                                            const CoordinateSet& coords,
                                            const std::vector<KernelSpec>& kernels, Rng& rng) {
  BasisMatrix b;
  b.columns = generate_structured_orthonormal(n, k, omegas, rng);
  b.coords = coords;
  b.column_kernels = kernels;
  return b;
}

Matrix null_space_basis(const Matrix& w_partial, Eigen::Index n_if_empty) {
  if (w_partial.size() == 0) {
    require(n_if_empty >= 1, "null_space_basis: dimension required for empty prefix");
    return Matrix::Identity(n_if_empty, n_if_empty);
  }
  const Eigen::Index n = w_partial.rows();
  const Eigen::Index j = w_partial.cols();
  require(j < n, "null_space_basis: prefix must have fewer columns than rows");
  {
    Matrix g = w_partial.transpose() * w_partial - Matrix::Identity(j, j);
    if (g.cwiseAbs().maxCoeff() > 1e-6)
      throw NumericalError("null_space_basis: input columns are not orthonormal");
  }
  Eigen::HouseholderQR<Matrix> qr(w_partial);
  Matrix R = qr.matrixQR().topLeftCorner(j, j).triangularView<Eigen::Upper>();
  for (Eigen::Index c = 0; c < j; ++c) {
    if (std::abs(R(c, c)) < 1e-8)
      throw NumericalError("null_space_basis: rank-deficient prefix (|R_" +
                           std::to_string(c) + "| ~ 0)");
  }
  Matrix Q = qr.householderQ();
  // fixed sign convention: non-negative diagonal of the triangular factor
  for (Eigen::Index c = 0; c < j; ++c)
    if (R(c, c) < 0) Q.col(c) = -Q.col(c);
  return Q.rightCols(n - j);
}

double projected_normal_logdensity(double r, const Vector& w_tilde, const SpdCholesky& chol) {
  require(r > 0, "projected_normal: latent length r must be positive");
  const Eigen::Index ns = w_tilde.size();
  require(chol.L.rows() == ns, "projected_normal: dimension mismatch");
  require(std::abs(w_tilde.norm() - 1.0) < 1e-6, "projected_normal: w_tilde must be unit length");
  const Vector half = chol.L.triangularView<Eigen::Lower>().solve(w_tilde);
  const double quad = r * r * half.squaredNorm();
  return -0.5 * double(ns) * std::log(2.0 * M_PI) - 0.5 * chol.log_det() - 0.5 * quad +
         double(ns - 1) * std::log(r);
}

double projected_normal_logdensity(double r, const Vector& w_tilde, const Matrix& omega_proj) {
  return projected_normal_logdensity(r, w_tilde, robust_cholesky(omega_proj));
}

}  // namespace bsvd
