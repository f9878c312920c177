#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "bsvd/common.hpp"

namespace bsvd {

/// Seeded random source threaded explicitly through all stochastic operations.
/// Built on mt19937_64 with hand-rolled transforms so a fixed seed is
/// bit-reproducible across runs of one build. Not thread-safe; use one
/// instance per chain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Deterministically derive an independent stream (per replicate/chain).
  static std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

  double uniform();                       // U(0,1), never exactly 0 or 1
  double normal();                        // standard normal (Box-Muller)
  double gamma(double shape);             // Gamma(shape, scale=1)
  double inv_gamma(double shape, double rate);
  double trunc_normal(double mean, double sd, double lo, double hi);
  Vector normal_vector(Eigen::Index n);
  Vector unit_sphere(Eigen::Index n);

 private:
  std::mt19937_64 gen_;
};

/// log of the N(mean, sd^2) mass on (lo, hi); the truncated-normal proposal
/// correction in MH ratios.
double log_truncnorm_mass(double mean, double sd, double lo, double hi);

double normal_cdf(double x);

}  // namespace bsvd
