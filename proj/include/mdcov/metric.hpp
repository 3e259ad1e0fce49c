#pragma once

#include <array>
#include <string>
#include <vector>

#include "mdcov/matrix.hpp"

namespace mdcov {

// One observation. Vector metrics use coords; graph and discrete metrics
// may address points by label instead.
struct Point {
  std::vector<double> coords;
  std::string label;
};

enum class MetricKind {
  euclidean,
  manhattan,
  chebyshev,
  minkowski,
  discrete,
  graph,
  precomputed,
};

struct GraphEdge {
  std::string u;
  std::string v;
  double weight = 1.0;
};

struct MetricSpec {
  MetricKind kind = MetricKind::euclidean;
  double p = 2.0;                // Minkowski exponent, must be >= 1
  std::vector<GraphEdge> edges;  // graph metric only

  static MetricSpec euclidean() { return of(MetricKind::euclidean); }
  static MetricSpec manhattan() { return of(MetricKind::manhattan); }
  static MetricSpec chebyshev() { return of(MetricKind::chebyshev); }
  static MetricSpec discrete() { return of(MetricKind::discrete); }
  static MetricSpec minkowski(double p) {
    MetricSpec s = of(MetricKind::minkowski);
    s.p = p;
    return s;
  }
  static MetricSpec graph(std::vector<GraphEdge> edges) {
    MetricSpec s = of(MetricKind::graph);
    s.edges = std::move(edges);
    return s;
  }

 private:
  static MetricSpec of(MetricKind k) {
    MetricSpec s;
    s.kind = k;
    return s;
  }
};

// Validated pairwise-distance table; the universal sample representation.
struct DistanceMatrix {
  std::size_t n = 0;
  Matrix d;

  DistanceMatrix() = default;
  explicit DistanceMatrix(Matrix m) : n(m.nrow), d(std::move(m)) {}

  double operator()(std::size_t i, std::size_t j) const { return d(i, j); }
  double max_entry() const { return max_abs(d); }
};

struct ValidationReport {
  bool finite = true;
  bool symmetric = true;
  bool zero_diagonal = true;
  bool nonnegative = true;
  bool triangle = true;
  bool triangle_checked = false;
  // First failed check, in the order above; indices locate the violation
  // (k is the intermediate point, triangle check only).
  std::string violation;
  std::array<std::size_t, 3> where{0, 0, 0};

  bool pass() const {
    return finite && symmetric && zero_diagonal && nonnegative &&
           (!triangle_checked || triangle);
  }
};

// Pairwise distances under the requested metric. Graph distances are
// all-pairs shortest paths over the edge list. Throws on dimension
// mismatch, p < 1, disconnected graph, or unknown labels.
DistanceMatrix build_distance_matrix(const std::vector<Point>& points,
                                     const MetricSpec& spec);

// Checks the metric axioms; failures are reported, never thrown. The
// triangle check is O(n^3) and can be skipped.
ValidationReport validate_metric(const DistanceMatrix& m, double tol = 1e-9,
                                 bool check_triangle = true);

// Distance between two points under a vector or discrete metric.
double point_distance(const Point& x, const Point& y, const MetricSpec& spec);

}  // namespace mdcov
