#include "acfgm/core/dense_vector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "acfgm/core/errors.hpp"

namespace acfgm {

namespace {

void require_finite(const std::vector<double>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) {
      throw NumericError("non-finite entry at index " + std::to_string(i));
    }
  }
}

}  // namespace

DenseVector::DenseVector(std::size_t n, double fill) : values_(n, fill) {
  if (!std::isfinite(fill)) throw NumericError("non-finite fill value");
}

DenseVector::DenseVector(std::vector<double> values) : values_(std::move(values)) {
  require_finite(values_);
}

DenseVector::DenseVector(std::initializer_list<double> values) : values_(values) {
  require_finite(values_);
}

DenseVector DenseVector::unit(std::size_t n, std::size_t index, double scale) {
  if (index >= n) throw InvalidInput("unit vector index out of range");
  std::vector<double> v(n, 0.0);
  v[index] = scale;
  return DenseVector(std::move(v));
}

void require_same_size(const DenseVector& a, const DenseVector& b, const char* where) {
  if (a.size() != b.size()) {
    throw InvalidInput(std::string(where) + ": dimension mismatch (" + std::to_string(a.size()) +
                       " vs " + std::to_string(b.size()) + ")");
  }
}

double dot(const DenseVector& a, const DenseVector& b) {
  require_same_size(a, b, "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm_sq(const DenseVector& a) {
  double s = 0.0;
  for (double v : a.values()) s += v * v;
  return s;
}

double norm(const DenseVector& a) { return std::sqrt(norm_sq(a)); }

double norm_inf(const DenseVector& a) {
  double m = 0.0;
  for (double v : a.values()) m = std::max(m, std::abs(v));
  return m;
}

double norm_l1(const DenseVector& a) {
  double s = 0.0;
  for (double v : a.values()) s += std::abs(v);
  return s;
}

double distance_sq(const DenseVector& a, const DenseVector& b) {
  require_same_size(a, b, "distance_sq");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

DenseVector combine(double a, const DenseVector& x, double b, const DenseVector& y) {
  require_same_size(x, y, "combine");
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + b * y[i];
  return DenseVector(std::move(out));
}

DenseVector operator+(const DenseVector& a, const DenseVector& b) { return combine(1.0, a, 1.0, b); }

DenseVector operator-(const DenseVector& a, const DenseVector& b) { return combine(1.0, a, -1.0, b); }

DenseVector operator*(double s, const DenseVector& a) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return DenseVector(std::move(out));
}

}  // namespace acfgm
