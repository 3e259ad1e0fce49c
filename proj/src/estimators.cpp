#include "mdcov/estimators.hpp"

#include <cmath>
#include <string>

#include "mdcov/error.hpp"

namespace mdcov {

void require_paired(const PairedSample& s) {
  if (s.dx.n == 0) precondition_error("empty sample");
  if (s.dx.n != s.dy.n)
    input_error("length mismatch: X has " + std::to_string(s.dx.n) +
                " observations, Y has " + std::to_string(s.dy.n));
}

CenteredMatrices v_center(const DistanceMatrix& m) {
  const std::size_t n = m.n;
  if (n == 0) precondition_error("v_center needs n >= 1");
  std::vector<double> rowmean(n, 0.0);
  CompensatedSum grand;
  for (std::size_t i = 0; i < n; ++i) {
    CompensatedSum row;
    for (std::size_t j = 0; j < n; ++j) row.add(m(i, j));
    rowmean[i] = row.value() / static_cast<double>(n);
    grand.add(row.value());
  }
  const double grandmean = grand.value() / static_cast<double>(n * n);

  CenteredMatrices out{n, Matrix(n, n), Centering::V};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.m(i, j) = m(i, j) - rowmean[i] - rowmean[j] + grandmean;
  return out;
}

CenteredMatrices u_center(const DistanceMatrix& m) {
  const std::size_t n = m.n;
  if (n < 4) precondition_error("u_center needs n >= 4");
  std::vector<double> rowsum(n, 0.0);
  CompensatedSum grand;
  for (std::size_t i = 0; i < n; ++i) {
    CompensatedSum row;
    for (std::size_t j = 0; j < n; ++j) row.add(m(i, j));
    rowsum[i] = row.value();
    grand.add(row.value());
  }
  const double nm2 = static_cast<double>(n - 2);
  const double pair_norm = static_cast<double>(n - 1) * nm2;

  CenteredMatrices out{n, Matrix(n, n), Centering::U};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      out.m(i, j) =
          m(i, j) - rowsum[i] / nm2 - rowsum[j] / nm2 + grand.value() / pair_norm;
    }
  return out;
}

namespace {

double centered_product_v(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.nrow;
  CompensatedSum s;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s.add(a(i, j) * b(i, j));
  return s.value() / (static_cast<double>(n) * static_cast<double>(n));
}

double centered_product_u(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.nrow;
  CompensatedSum s;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s.add(a(i, j) * b(i, j));
  return s.value() / (static_cast<double>(n) * static_cast<double>(n - 3));
}

}  // namespace

double dcov_v(const PairedSample& s) {
  require_paired(s);
  return centered_product_v(v_center(s.dx).m, v_center(s.dy).m);
}

double dvar_v(const DistanceMatrix& m) {
  Matrix a = v_center(m).m;
  return centered_product_v(a, a);
}

double dcov_u(const PairedSample& s) {
  require_paired(s);
  if (s.n() < 6) precondition_error("dcov_u needs n >= 6");
  return centered_product_u(u_center(s.dx).m, u_center(s.dy).m);
}

double dvar_u(const DistanceMatrix& m) {
  if (m.n < 6) precondition_error("dvar_u needs n >= 6");
  Matrix a = u_center(m).m;
  return centered_product_u(a, a);
}

double dcor_v(const PairedSample& s) {
  require_paired(s);
  double vx = dvar_v(s.dx);
  double vy = dvar_v(s.dy);
  if (vx <= 0.0 || vy <= 0.0) return 0.0;
  return dcov_v(s) / std::sqrt(vx * vy);
}

double dcor_u(const PairedSample& s) {
  require_paired(s);
  if (s.n() < 6) precondition_error("dcor_u needs n >= 6");
  double vx = dvar_u(s.dx);
  double vy = dvar_u(s.dy);
  if (vx <= 0.0 || vy <= 0.0) return 0.0;
  return dcov_u(s) / std::sqrt(vx * vy);
}

double kernel_h(const PairedSample& s, const std::array<std::size_t, 6>& idx) {
  require_paired(s);
  for (std::size_t i : idx)
    if (i >= s.n()) input_error("kernel_h: index out of range");
  const DistanceMatrix& dx = s.dx;
  const DistanceMatrix& dy = s.dy;
  double fx = kernel_f(dx(idx[0], idx[1]), dx(idx[2], idx[3]),
                       dx(idx[0], idx[2]), dx(idx[1], idx[3]));
  double fy = kernel_f(dy(idx[0], idx[1]), dy(idx[4], idx[5]),
                       dy(idx[0], idx[4]), dy(idx[1], idx[5]));
  return fx * fy;
}

double brute_force_v(const PairedSample& s) {
  require_paired(s);
  const std::size_t n = s.n();
  if (n > 12) precondition_error("brute_force_v guard: n <= 12");
  const DistanceMatrix& dx = s.dx;
  const DistanceMatrix& dy = s.dy;
  double total = 0.0;
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t i2 = 0; i2 < n; ++i2)
      for (std::size_t i3 = 0; i3 < n; ++i3)
        for (std::size_t i4 = 0; i4 < n; ++i4) {
          double fx = kernel_f(dx(i1, i2), dx(i3, i4), dx(i1, i3), dx(i2, i4));
          if (fx == 0.0) continue;
          for (std::size_t i5 = 0; i5 < n; ++i5)
            for (std::size_t i6 = 0; i6 < n; ++i6)
              total += fx * kernel_f(dy(i1, i2), dy(i5, i6), dy(i1, i5),
                                     dy(i2, i6));
        }
  const double dn = static_cast<double>(n);
  return total / (dn * dn * dn * dn * dn * dn);
}

double brute_force_u(const PairedSample& s) {
  require_paired(s);
  const std::size_t n = s.n();
  if (n < 6 || n > 10) precondition_error("brute_force_u guard: 6 <= n <= 10");
  const DistanceMatrix& dx = s.dx;
  const DistanceMatrix& dy = s.dy;
  double total = 0.0;
  double tuples = 0.0;
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t i2 = 0; i2 < n; ++i2) {
      if (i2 == i1) continue;
      for (std::size_t i3 = 0; i3 < n; ++i3) {
        if (i3 == i1 || i3 == i2) continue;
        for (std::size_t i4 = 0; i4 < n; ++i4) {
          if (i4 == i1 || i4 == i2 || i4 == i3) continue;
          double fx = kernel_f(dx(i1, i2), dx(i3, i4), dx(i1, i3), dx(i2, i4));
          for (std::size_t i5 = 0; i5 < n; ++i5) {
            if (i5 == i1 || i5 == i2 || i5 == i3 || i5 == i4) continue;
            for (std::size_t i6 = 0; i6 < n; ++i6) {
              if (i6 == i1 || i6 == i2 || i6 == i3 || i6 == i4 || i6 == i5)
                continue;
              total += fx * kernel_f(dy(i1, i2), dy(i5, i6), dy(i1, i5),
                                     dy(i2, i6));
              tuples += 1.0;
            }
          }
        }
      }
    }
  return total / tuples;
}

double brownian_plugin(const PairedSample& s) {
  require_paired(s);
  const std::size_t n = s.n();
  const double dn = static_cast<double>(n);
  CompensatedSum t1;
  std::vector<double> rowx(n, 0.0), rowy(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    CompensatedSum rx, ry;
    for (std::size_t j = 0; j < n; ++j) {
      t1.add(s.dx(i, j) * s.dy(i, j));
      rx.add(s.dx(i, j));
      ry.add(s.dy(i, j));
    }
    rowx[i] = rx.value();
    rowy[i] = ry.value();
  }
  CompensatedSum sumx, sumy, t3;
  for (std::size_t i = 0; i < n; ++i) {
    sumx.add(rowx[i]);
    sumy.add(rowy[i]);
    t3.add(rowx[i] * rowy[i]);
  }
  double T1 = t1.value() / (dn * dn);
  double T2 = (sumx.value() / (dn * dn)) * (sumy.value() / (dn * dn));
  double T3 = t3.value() / (dn * dn * dn);
  return T1 + T2 - 2.0 * T3;
}

}  // namespace mdcov
