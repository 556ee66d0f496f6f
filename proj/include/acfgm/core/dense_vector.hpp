#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace acfgm {

/// Fixed-length vector of finite doubles.
///
/// Every constructor and every arithmetic helper below rejects NaN/Inf with
/// NumericError, so a DenseVector in hand is always finite. Elements are
/// read-only; new values come from the free functions or from a fresh
/// std::vector<double>.
class DenseVector {
 public:
  DenseVector() = default;
  explicit DenseVector(std::size_t n, double fill = 0.0);
  explicit DenseVector(std::vector<double> values);
  DenseVector(std::initializer_list<double> values);

  static DenseVector unit(std::size_t n, std::size_t index, double scale = 1.0);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }
  const std::vector<double>& to_vector() const noexcept { return values_; }

  bool operator==(const DenseVector& other) const = default;

 private:
  std::vector<double> values_;
};

double dot(const DenseVector& a, const DenseVector& b);
double norm(const DenseVector& a);
double norm_sq(const DenseVector& a);
double norm_inf(const DenseVector& a);
double norm_l1(const DenseVector& a);
double distance_sq(const DenseVector& a, const DenseVector& b);

DenseVector operator+(const DenseVector& a, const DenseVector& b);
DenseVector operator-(const DenseVector& a, const DenseVector& b);
DenseVector operator*(double s, const DenseVector& a);

/// a * x + b * y
DenseVector combine(double a, const DenseVector& x, double b, const DenseVector& y);

/// Throws InvalidInput when sizes differ.
void require_same_size(const DenseVector& a, const DenseVector& b, const char* where);

}  // namespace acfgm
