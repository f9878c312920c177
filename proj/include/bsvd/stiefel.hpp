#pragma once

#include <vector>

#include "bsvd/kernels.hpp"
#include "bsvd/rng.hpp"

namespace bsvd {

/// n x k matrix with orthonormal columns plus the coordinate/kernel metadata
/// describing each column's correlation structure.
struct BasisMatrix {
  Matrix columns;
  CoordinateSet coords;
  std::vector<KernelSpec> column_kernels;

  Eigen::Index rows() const { return columns.rows(); }
  Eigen::Index cols() const { return columns.cols(); }

  /// max-abs entry of W'W - I.
  double orthonormality_gap() const;
};

/// Draw W column by column: z_i ~ N(0, Omega_i), project off the span of the
/// previous columns, normalize. With Omega_i = I the result is uniform on the
/// Stiefel manifold.
BasisMatrix generate_structured_orthonormal(Eigen::Index n, Eigen::Index k,
                                            const std::vector<Matrix>& omegas,
                                            const CoordinateSet& coords,
                                            const std::vector<KernelSpec>& kernels, Rng& rng);

/// Convenience overload without metadata bookkeeping.
Matrix generate_structured_orthonormal(Eigen::Index n, Eigen::Index k,
                                       const std::vector<Matrix>& omegas, Rng& rng);

/// Orthonormal basis N of the null space of W_partial' (n x j, orthonormal
/// columns, j < n): N'N = I, N'W_partial = 0. Deterministic for fixed input;
/// the empty prefix (j = 0) returns the identity.
Matrix null_space_basis(const Matrix& w_partial, Eigen::Index n_if_empty = -1);

/// log p(r, w_tilde) for the latent-length augmented projected normal:
/// (2 pi)^{-n*/2} |Omega*|^{-1/2} exp(-r^2 w'Omega*^{-1}w / 2) r^{n*-1}.
double projected_normal_logdensity(double r, const Vector& w_tilde, const Matrix& omega_proj);

/// Same density evaluated through a precomputed factor of Omega*.
double projected_normal_logdensity(double r, const Vector& w_tilde, const SpdCholesky& chol);

}  // namespace bsvd
