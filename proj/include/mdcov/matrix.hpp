#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace mdcov {

// Dense row-major matrix of doubles.
struct Matrix {
  std::size_t nrow = 0;
  std::size_t ncol = 0;
  std::vector<double> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : nrow(r), ncol(c), a(r * c, fill) {}

  double& operator()(std::size_t i, std::size_t j) { return a[i * ncol + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a[i * ncol + j]; }

  bool square() const { return nrow == ncol; }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
};

// Largest absolute entry, 0 for an empty matrix.
inline double max_abs(const Matrix& m) {
  double r = 0.0;
  for (double v : m.a) r = std::max(r, std::abs(v));
  return r;
}

// Compensated (Neumaier) summation; used for the O(n^2) reductions where
// terms of mixed sign accumulate.
class CompensatedSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace mdcov
