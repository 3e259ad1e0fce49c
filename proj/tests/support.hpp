#pragma once

// Shared generators for the test suites: seeded random samples, measures,
// and small statistics helpers. Everything here is deterministic given the
// generator state that is passed in.

#include <algorithm>
#include <cmath>
#include <vector>

#include "mdcov/estimators.hpp"
#include "mdcov/measure.hpp"
#include "mdcov/metric.hpp"
#include "mdcov/rng.hpp"

namespace testutil {

using namespace mdcov;

inline std::vector<Point> random_points(Rng& g, std::size_t n, std::size_t dim,
                                        double spread = 1.0) {
  std::vector<Point> pts(n);
  for (auto& p : pts) {
    p.coords.resize(dim);
    for (auto& c : p.coords) c = spread * (2.0 * g.next_double() - 1.0);
  }
  return pts;
}

// Cycles through the built-in vector metrics plus the discrete one.
inline MetricSpec mixed_metric(std::size_t which) {
  switch (which % 5) {
    case 0:
      return MetricSpec::euclidean();
    case 1:
      return MetricSpec::manhattan();
    case 2:
      return MetricSpec::chebyshev();
    case 3:
      return MetricSpec::minkowski(1.5);
    default:
      return MetricSpec::discrete();
  }
}

inline DistanceMatrix random_distance_matrix(Rng& g, std::size_t n,
                                             std::size_t dim,
                                             const MetricSpec& spec) {
  if (spec.kind == MetricKind::discrete) {
    // few repeated values so the discrete metric sees genuine ties
    std::vector<Point> pts(n);
    for (auto& p : pts)
      p.coords = {static_cast<double>(g.next_below(std::max<std::size_t>(2, n / 2)))};
    return build_distance_matrix(pts, spec);
  }
  return build_distance_matrix(random_points(g, n, dim), spec);
}

inline PairedSample random_paired_sample(Rng& g, std::size_t n,
                                         std::size_t variant = 0) {
  std::size_t dimx = 1 + g.next_below(3);
  std::size_t dimy = 1 + g.next_below(3);
  return PairedSample{random_distance_matrix(g, n, dimx, mixed_metric(variant)),
                      random_distance_matrix(g, n, dimy, mixed_metric(variant + 2))};
}

inline std::vector<double> random_weights(Rng& g, std::size_t k) {
  std::vector<double> w(k);
  double total = 0.0;
  for (auto& x : w) {
    x = g.next_double() + 1e-3;
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

inline FiniteSignedMeasure random_probability_measure(Rng& g, std::size_t k,
                                                      std::size_t variant = 0) {
  return FiniteSignedMeasure{
      random_distance_matrix(g, k, 1 + g.next_below(3), mixed_metric(variant)),
      random_weights(g, k)};
}

inline FiniteJointMeasure random_joint_measure(Rng& g, std::size_t k1,
                                               std::size_t k2) {
  FiniteJointMeasure t{random_distance_matrix(g, k1, 2, MetricSpec::euclidean()),
                       random_distance_matrix(g, k2, 1, MetricSpec::manhattan()),
                       Matrix(k1, k2)};
  double total = 0.0;
  for (auto& x : t.w.a) {
    x = g.next_double();
    total += x;
  }
  for (auto& x : t.w.a) x /= total;
  return t;
}

// Draw n sample indices from a finite joint measure and materialise the
// paired distance matrices of the sampled atoms.
inline PairedSample sample_from_joint(Rng& g, const FiniteJointMeasure& t,
                                      std::size_t n) {
  std::vector<double> cdf(t.w.a.size());
  double acc = 0.0;
  for (std::size_t c = 0; c < t.w.a.size(); ++c) {
    acc += t.w.a[c];
    cdf[c] = acc;
  }
  std::vector<std::size_t> xi(n), yi(n);
  for (std::size_t s = 0; s < n; ++s) {
    double u = g.next_double() * acc;
    std::size_t c = static_cast<std::size_t>(
        std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    if (c >= cdf.size()) c = cdf.size() - 1;
    xi[s] = c / t.w.ncol;
    yi[s] = c % t.w.ncol;
  }
  Matrix dx(n, n), dy(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      dx(i, j) = t.space_x(xi[i], xi[j]);
      dy(i, j) = t.space_y(yi[i], yi[j]);
    }
  return PairedSample{DistanceMatrix(std::move(dx)), DistanceMatrix(std::move(dy))};
}

inline double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

inline double quantile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  double pos = q * static_cast<double>(v.size() - 1);
  std::size_t lo = static_cast<std::size_t>(pos);
  std::size_t hi = std::min(lo + 1, v.size() - 1);
  double frac = pos - static_cast<double>(lo);
  return v[lo] * (1.0 - frac) + v[hi] * frac;
}

}  // namespace testutil
