#include "bsvd/rng.hpp"

namespace bsvd {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t Rng::derive_seed(std::uint64_t base, std::uint64_t stream) {
  return splitmix64(base + 0x632BE59BD9B4E019ull * (stream + 1));
}

double Rng::uniform() {
  // 53-bit mantissa in (0,1)
  return ((gen_() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

double Rng::normal() {
  double u1 = uniform();
  double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

double Rng::gamma(double shape) {
  require(shape > 0, "gamma: shape must be positive");
  if (shape < 1.0) {
    // boost to shape+1, then scale by U^{1/shape}
    double g = gamma(shape + 1.0);
    return g * std::pow(uniform(), 1.0 / shape);
  }
  // Marsaglia-Tsang squeeze
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double Rng::inv_gamma(double shape, double rate) {
  require(rate > 0, "inv_gamma: rate must be positive");
  return rate / gamma(shape);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }

double log_truncnorm_mass(double mean, double sd, double lo, double hi) {
  const double a = (lo - mean) / sd;
  const double b = (hi - mean) / sd;
  return std::log(normal_cdf(b) - normal_cdf(a));
}

double Rng::trunc_normal(double mean, double sd, double lo, double hi) {
  require(sd > 0 && lo < hi, "trunc_normal: invalid parameters");
  const double a = (lo - mean) / sd;
  const double b = (hi - mean) / sd;
  const double mass = normal_cdf(b) - normal_cdf(a);
  double z = 0.0;
  if (mass > 0.05) {
    do {
      z = normal();
    } while (z < a || z > b);
  } else if (a >= 0.0 || b <= 0.0) {
    // Robert (1995) one-sided exponential rejection at the near bound
    const double lob = (a >= 0.0) ? a : -b;
    const double upb = (a >= 0.0) ? b : -a;
    const double lam = 0.5 * (lob + std::sqrt(lob * lob + 4.0));
    for (;;) {
      const double x = lob - std::log(uniform()) / lam;
      if (x > upb) continue;
      const double r = x - lam;
      if (std::log(uniform()) <= -0.5 * r * r) {
        z = (a >= 0.0) ? x : -x;
        break;
      }
    }
  } else {
    // narrow interval straddling zero
    for (;;) {
      const double x = a + (b - a) * uniform();
      if (std::log(uniform()) <= -0.5 * x * x) {
        z = x;
        break;
      }
    }
  }
  return mean + sd * z;
}

Vector Rng::normal_vector(Eigen::Index n) {
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = normal();
  return v;
}

Vector Rng::unit_sphere(Eigen::Index n) {
  Vector v = normal_vector(n);
  return v / v.norm();
}

}  // namespace bsvd
