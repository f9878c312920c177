#include "bsvd/kernels.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_bessel.h>

#include <cmath>
#include <sstream>

namespace bsvd {

namespace {
const int kGslHandlerOff = [] {
  gsl_set_error_handler_off();
  return 0;
}();
}  // namespace

std::string family_name(KernelFamily f) {
  switch (f) {
    case KernelFamily::Matern: return "matern";
    case KernelFamily::Gaussian: return "gaussian";
    case KernelFamily::Exponential: return "exponential";
    case KernelFamily::Identity: return "identity";
  }
  return "?";
}

KernelFamily family_from_name(const std::string& name) {
  if (name == "matern") return KernelFamily::Matern;
  if (name == "gaussian") return KernelFamily::Gaussian;
  if (name == "exponential") return KernelFamily::Exponential;
  if (name == "identity") return KernelFamily::Identity;
  throw InputError("unknown kernel family '" + name +
                   "' (expected matern|gaussian|exponential|identity)");
}

KernelSpec KernelSpec::matern(double nu, double rho) {
  KernelSpec s{KernelFamily::Matern, nu, rho};
  s.validate();
  return s;
}
KernelSpec KernelSpec::gaussian(double rho) {
  KernelSpec s{KernelFamily::Gaussian, 0.0, rho};
  s.validate();
  return s;
}
KernelSpec KernelSpec::exponential(double rho) {
  KernelSpec s{KernelFamily::Exponential, 0.0, rho};
  s.validate();
  return s;
}
KernelSpec KernelSpec::identity() { return KernelSpec{KernelFamily::Identity, 0.0, 0.0}; }

KernelSpec KernelSpec::with_rho(double new_rho) const {
  KernelSpec s = *this;
  s.rho = new_rho;
  s.validate();
  return s;
}

void KernelSpec::validate() const {
  if (family == KernelFamily::Identity) return;
  require(rho > 0, "kernel: length-scale rho must be positive");
  if (family == KernelFamily::Matern) require(nu > 0, "kernel: Matern nu must be positive");
}

CoordinateSet::CoordinateSet(Matrix points) : points_(std::move(points)) {
  require(points_.rows() >= 1 && points_.cols() >= 1,
          "coordinates: need n >= 1 points of dimension d >= 1");
}

CoordinateSet CoordinateSet::linspace(double lo, double hi, Eigen::Index n) {
  require(n >= 1, "linspace: n >= 1");
  Matrix pts(n, 1);
  if (n == 1) {
    pts(0, 0) = lo;
  } else {
    for (Eigen::Index i = 0; i < n; ++i) pts(i, 0) = lo + (hi - lo) * double(i) / double(n - 1);
  }
  return CoordinateSet(pts);
}

double CoordinateSet::distance(Eigen::Index i, Eigen::Index j) const {
  return (points_.row(i) - points_.row(j)).norm();
}

double CoordinateSet::max_distance() const {
  double best = 0;
  for (Eigen::Index i = 0; i < size(); ++i)
    for (Eigen::Index j = i + 1; j < size(); ++j) best = std::max(best, distance(i, j));
  return best;
}

namespace detail {

double matern_half_integer(double dist, int p, double nu, double rho) {
  const double a = std::sqrt(2.0 * nu) * dist / rho;
  // exp(-a) * p!/(2p)! * sum_i (p+i)!/(i!(p-i)!) (2a)^{p-i}
  double coef = 1.0;
  for (int i = p + 1; i <= 2 * p; ++i) coef /= double(i);  // p!/(2p)!
  double sum = 0.0;
  for (int i = 0; i <= p; ++i) {
    double c = 1.0;
    for (int j = i + 1; j <= p + i; ++j) c *= double(j);        // (p+i)!/i!
    for (int j = 2; j <= p - i; ++j) c /= double(j);            // /(p-i)!
    sum += c * std::pow(2.0 * a, p - i);
  }
  return std::exp(-a) * coef * sum;
}

double matern_bessel(double dist, double nu, double rho) {
  const double a = std::sqrt(2.0 * nu) * dist / rho;
  gsl_sf_result lnk;
  const int status = gsl_sf_bessel_lnKnu_e(nu, a, &lnk);
  if (status != GSL_SUCCESS) {
    std::ostringstream os;
    os << "Matern: lnK_nu failed (nu=" << nu << ", arg=" << a << ")";
    throw NumericalError(os.str());
  }
  const double logc = (1.0 - nu) * std::log(2.0) - std::lgamma(nu) + nu * std::log(a) + lnk.val;
  return std::min(std::exp(logc), 1.0);
}

}  // namespace detail

double kernel_value_at_distance(const KernelSpec& spec, double dist) {
  spec.validate();
  require(dist >= 0, "kernel: negative distance");
  switch (spec.family) {
    case KernelFamily::Identity:
      return dist == 0.0 ? 1.0 : 0.0;
    case KernelFamily::Exponential:
      return std::exp(-dist / spec.rho);
    case KernelFamily::Gaussian:
      return std::exp(-dist * dist / spec.rho);
    case KernelFamily::Matern: {
      if (dist == 0.0) return 1.0;
      const int p = int(std::lround(spec.nu - 0.5));
      if (p >= 0 && std::abs(spec.nu - (p + 0.5)) < 1e-12)
        return detail::matern_half_integer(dist, p, spec.nu, spec.rho);
      return detail::matern_bessel(dist, spec.nu, spec.rho);
    }
  }
  throw InputError("kernel: bad family");
}

double kernel_value(const KernelSpec& spec, const Eigen::Ref<const Vector>& s,
                    const Eigen::Ref<const Vector>& t) {
  require(s.size() == t.size(), "kernel: coordinate dimension mismatch");
  return kernel_value_at_distance(spec, (s - t).norm());
}

Matrix correlation_matrix(const KernelSpec& spec, const CoordinateSet& coords) {
  const Eigen::Index n = coords.size();
  if (spec.family == KernelFamily::Identity) return Matrix::Identity(n, n);
  Matrix C(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    C(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double v = kernel_value_at_distance(spec, coords.distance(i, j));
      C(i, j) = v;
      C(j, i) = v;
    }
  }
  return C;
}

double SpdCholesky::log_det() const { return 2.0 * L.diagonal().array().log().sum(); }

Vector SpdCholesky::solve(const Vector& b) const {
  Vector y = L.triangularView<Eigen::Lower>().solve(b);
  return L.transpose().triangularView<Eigen::Upper>().solve(y);
}

Matrix SpdCholesky::inverse() const {
  const Eigen::Index n = L.rows();
  Matrix inv = L.triangularView<Eigen::Lower>().solve(Matrix::Identity(n, n));
  return inv.transpose() * inv;
}

SpdCholesky robust_cholesky(const Matrix& mat) {
  require(mat.rows() == mat.cols(), "cholesky: matrix must be square");
  double eps = 0.0;
  for (;;) {
    Matrix m = mat;
    if (eps > 0) m.diagonal().array() += eps;
    Eigen::LLT<Matrix> llt(m);
    if (llt.info() == Eigen::Success) return SpdCholesky{llt.matrixL(), eps};
    if (eps == 0.0) {
      eps = 1e-10;
    } else if (eps < 1e-6) {
      eps = std::min(eps * 2.0, 1e-6);
    } else {
      std::ostringstream os;
      os << "cholesky failed after max jitter 1e-6 (n=" << mat.rows()
         << ", diag range [" << mat.diagonal().minCoeff() << ", "
         << mat.diagonal().maxCoeff() << "])";
      throw NumericalError(os.str());
    }
  }
}

}  // namespace bsvd
