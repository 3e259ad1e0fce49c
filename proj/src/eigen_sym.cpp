#include "mdcov/eigen_sym.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mdcov/error.hpp"

namespace mdcov {

namespace {

double off_diagonal_norm(const Matrix& b) {
  double s = 0.0;
  for (std::size_t p = 0; p < b.nrow; ++p)
    for (std::size_t q = p + 1; q < b.ncol; ++q) s += b(p, q) * b(p, q);
  return std::sqrt(2.0 * s);
}

}  // namespace

EigenDecomposition symmetric_eigen(const Matrix& m) {
  if (!m.square()) precondition_error("symmetric_eigen: matrix not square");
  const std::size_t n = m.nrow;
  const double scale = max_abs(m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(m(i, j) - m(j, i)) > 1e-9 * std::max(1.0, scale))
        precondition_error("symmetric_eigen: matrix not symmetric");

  // work on the symmetrised copy so tiny input asymmetry cannot leak in
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = 0.5 * (m(i, j) + m(j, i));
  Matrix v = Matrix::identity(n);

  const double stop = 1e-14 * std::max(scale, 1e-300);
  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_norm(b) <= stop * static_cast<double>(n)) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        double bpq = b(p, q);
        if (std::abs(bpq) <= 1e-300) {
          b(p, q) = b(q, p) = 0.0;
          continue;
        }
        double theta = (b(q, q) - b(p, p)) / (2.0 * bpq);
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        double tau = s / (1.0 + c);

        double bpp = b(p, p), bqq = b(q, q);
        b(p, p) = bpp - t * bpq;
        b(q, q) = bqq + t * bpq;
        b(p, q) = b(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          double vrp = v(r, p), vrq = v(r, q);
          v(r, p) = vrp - s * (vrq + tau * vrp);
          v(r, q) = vrq + s * (vrp - tau * vrq);
          if (r == p || r == q) continue;
          double brp = b(r, p), brq = b(r, q);
          b(r, p) = b(p, r) = brp - s * (brq + tau * brp);
          b(r, q) = b(q, r) = brq + s * (brp - tau * brq);
        }
      }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&b](std::size_t i, std::size_t j) { return b(i, i) > b(j, j); });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = b(order[k], order[k]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

}  // namespace mdcov
