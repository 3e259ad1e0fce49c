#pragma once

#include <array>

#include "mdcov/matrix.hpp"
#include "mdcov/metric.hpp"

namespace mdcov {

enum class Centering { V, U };

// Doubly centred transform of a distance matrix. V-centring subtracts row,
// column and grand means; U-centring uses the n-2 / (n-1)(n-2) constants
// that make the paired product an unbiased estimator, with a zero diagonal.
struct CenteredMatrices {
  std::size_t n = 0;
  Matrix m;
  Centering centering = Centering::V;
};

// A paired sample is two distance matrices over the same observations.
// Estimators never see raw points, so the two sides may carry completely
// unrelated metrics.
struct PairedSample {
  DistanceMatrix dx;
  DistanceMatrix dy;

  std::size_t n() const { return dx.n; }
};

void require_paired(const PairedSample& s);

CenteredMatrices v_center(const DistanceMatrix& m);
CenteredMatrices u_center(const DistanceMatrix& m);  // n >= 4

// Plug-in (V-statistic) estimator: (1/n^2) sum A.B. Nonnegative whenever
// both marginal metrics are of negative type.
double dcov_v(const PairedSample& s);
double dvar_v(const DistanceMatrix& m);

// Unbiased (U-statistic) estimator: sum_{i != j} At.Bt / (n(n-3)); may be
// negative. n >= 6.
double dcov_u(const PairedSample& s);
double dvar_u(const DistanceMatrix& m);

// dcov / sqrt(dvar_x dvar_y), zero when either variance vanishes. The U
// flavour is reported raw: it is not clipped to [0,1], so small negative
// values and slight overshoots are visible rather than hidden.
double dcor_v(const PairedSample& s);
double dcor_u(const PairedSample& s);

// f(z1,z2,z3,z4) = d12 + d34 - d13 - d24, the building block of the
// order-6 kernel.
inline double kernel_f(double d12, double d34, double d13, double d24) {
  return d12 + d34 - d13 - d24;
}

// h = f_X(x1,x2,x3,x4) * f_Y(y1,y2,y5,y6) evaluated through the two
// distance matrices; repeated indices are allowed.
double kernel_h(const PairedSample& s, const std::array<std::size_t, 6>& idx);

// Exact sixfold sums over the kernel; the independent oracles the O(n^2)
// estimators are validated against. Guarded: V allows n <= 12, U needs
// 6 <= n <= 10.
double brute_force_v(const PairedSample& s);
double brute_force_u(const PairedSample& s);

// E[d_X d_Y] + E[d_X]E[d_Y] - 2E[d_X(X,X')d_Y(Y,Y'')] at the empirical
// measure; algebraically identical to dcov_v.
double brownian_plugin(const PairedSample& s);

}  // namespace mdcov
