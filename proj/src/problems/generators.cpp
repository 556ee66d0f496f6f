#include "acfgm/problems/generators.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "acfgm/core/errors.hpp"

namespace acfgm {

double InstanceRng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double InstanceRng::normal() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

std::size_t InstanceRng::below(std::size_t n) {
  const auto k = static_cast<std::size_t>(uniform() * static_cast<double>(n));
  return k < n ? k : n - 1;
}

namespace {

void check_shape(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw InvalidInput("instance dimensions must be >= 1");
}

std::string provenance(const char* family, std::uint64_t seed) {
  return std::string("generator:") + family + " seed=" + std::to_string(seed);
}

}  // namespace

Dataset random_qp_instance(std::size_t m, std::size_t n, std::uint64_t seed) {
  check_shape(m, n);
  InstanceRng rng(seed);
  std::vector<double> a(m * n);
  for (auto& v : a) v = rng.uniform();
  std::vector<double> dir(n);
  for (auto& v : dir) v = rng.normal();
  const double radius = std::pow(rng.uniform(), 1.0 / static_cast<double>(n));
  DenseVector d(std::move(dir));
  const double nd = norm(d);
  DenseVector x_star = nd > 0.0 ? (radius / nd) * d : DenseVector(n, 0.0);

  Dataset out;
  out.a = SparseMatrixCSR::from_dense(m, n, a);
  out.b = matvec(out.a, x_star);
  out.x_star = std::move(x_star);
  out.name = "qp_" + std::to_string(m) + "x" + std::to_string(n) + "_s" + std::to_string(seed);
  out.provenance = provenance("qp", seed);
  return out;
}

Dataset random_regression_instance(std::size_t m, std::size_t n, std::uint64_t seed,
                                   double sparsity, double noise) {
  check_shape(m, n);
  if (!(sparsity > 0.0 && sparsity <= 1.0)) throw InvalidInput("sparsity must lie in (0, 1]");
  if (!(noise >= 0.0)) throw InvalidInput("noise must be >= 0");
  InstanceRng rng(seed);
  std::vector<double> a(m * n);
  for (auto& v : a) v = rng.normal();
  const std::size_t k =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(sparsity * static_cast<double>(n))));
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<double> x(n, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.below(n - i);
    std::swap(perm[i], perm[j]);
    x[perm[i]] = rng.normal();
  }
  Dataset out;
  out.a = SparseMatrixCSR::from_dense(m, n, a);
  const DenseVector clean = matvec(out.a, DenseVector(x));
  std::vector<double> b(m);
  for (std::size_t i = 0; i < m; ++i) b[i] = clean[i] + noise * rng.normal();
  out.b = DenseVector(std::move(b));
  out.name = "regression_" + std::to_string(m) + "x" + std::to_string(n) + "_s" + std::to_string(seed);
  out.provenance = provenance("regression", seed);
  return out;
}

Dataset random_classification_instance(std::size_t m, std::size_t n, std::uint64_t seed,
                                       double density, double noise) {
  check_shape(m, n);
  if (!(density > 0.0 && density <= 1.0)) throw InvalidInput("density must lie in (0, 1]");
  if (!(noise >= 0.0)) throw InvalidInput("noise must be >= 0");
  InstanceRng rng(seed);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<double> a(m * n, 0.0);
  for (auto& v : a) {
    const bool keep = density >= 1.0 || rng.uniform() < density;
    if (keep) v = scale * rng.normal();
  }
  std::vector<double> w(n);
  for (auto& v : w) v = rng.normal();
  Dataset out;
  out.a = SparseMatrixCSR::from_dense(m, n, a);
  const DenseVector score = matvec(out.a, DenseVector(std::move(w)));
  std::vector<double> b(m);
  for (std::size_t i = 0; i < m; ++i) b[i] = score[i] + noise * rng.normal() >= 0.0 ? 1.0 : -1.0;
  out.b = DenseVector(std::move(b));
  out.name = "classification_" + std::to_string(m) + "x" + std::to_string(n) + "_s" +
             std::to_string(seed);
  out.provenance = provenance("classification", seed);
  return out;
}

}  // namespace acfgm
