#pragma once

#include <cstdint>
#include <random>

#include "acfgm/problems/dataset.hpp"

namespace acfgm {

/// Seeded stream used by every generator: std::mt19937_64(seed),
/// uniform(0,1) = (next() >> 11) * 2^-53, standard normals by Box-Muller
/// (one normal per pair of uniforms, cosine branch, 1 - u1 inside the log).
/// Fixed so instances are reproducible across platforms.
class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}
  double uniform();
  double normal();
  /// Uniform integer in [0, n).
  std::size_t below(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

/// A_ij ~ U[0,1] drawn row-major; x* uniform in the unit ball (Gaussian
/// direction, radius U^{1/n}); b = A x*, so min f = 0 and x_star is recorded.
Dataset random_qp_instance(std::size_t m, std::size_t n, std::uint64_t seed);

/// Regression stand-in: A_ij ~ N(0,1) row-major, x_true with
/// max(1, round(sparsity n)) nonzero N(0,1) entries at positions picked by a
/// partial Fisher-Yates shuffle, b = A x_true + noise * N(0,1).
Dataset random_regression_instance(std::size_t m, std::size_t n, std::uint64_t seed,
                                   double sparsity = 0.1, double noise = 0.1);

/// Classification stand-in: A_ij ~ N(0,1)/sqrt(n) kept with probability
/// `density` (for density < 1 a uniform draw decides each entry before its
/// normal), w ~ N(0,1),
/// b_i = +1 if <a_i, w> + noise * N(0,1) >= 0 else -1.
Dataset random_classification_instance(std::size_t m, std::size_t n, std::uint64_t seed,
                                       double density = 1.0, double noise = 0.1);

}  // namespace acfgm
