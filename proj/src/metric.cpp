#include "mdcov/metric.hpp"

#include <cmath>
#include <limits>
#include <unordered_map>

#include "mdcov/error.hpp"

namespace mdcov {

namespace {

bool points_equal(const Point& x, const Point& y) {
  if (!x.label.empty() && !y.label.empty()) return x.label == y.label;
  if (x.coords.size() != y.coords.size())
    input_error("discrete metric: points of unequal dimension");
  for (std::size_t k = 0; k < x.coords.size(); ++k)
    if (x.coords[k] != y.coords[k]) return false;
  return true;
}

double vector_distance(const Point& x, const Point& y, const MetricSpec& spec) {
  const std::size_t dim = x.coords.size();
  switch (spec.kind) {
    case MetricKind::euclidean: {
      double s = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        double diff = x.coords[k] - y.coords[k];
        s += diff * diff;
      }
      return std::sqrt(s);
    }
    case MetricKind::manhattan: {
      double s = 0.0;
      for (std::size_t k = 0; k < dim; ++k) s += std::abs(x.coords[k] - y.coords[k]);
      return s;
    }
    case MetricKind::chebyshev: {
      double s = 0.0;
      for (std::size_t k = 0; k < dim; ++k)
        s = std::max(s, std::abs(x.coords[k] - y.coords[k]));
      return s;
    }
    case MetricKind::minkowski: {
      double s = 0.0;
      for (std::size_t k = 0; k < dim; ++k)
        s += std::pow(std::abs(x.coords[k] - y.coords[k]), spec.p);
      return std::pow(s, 1.0 / spec.p);
    }
    default:
      input_error("not a vector metric");
  }
}

// All-pairs shortest paths by Floyd-Warshall over the labelled edge list.
// Vertices are indexed in order of first appearance.
Matrix graph_all_pairs(const std::vector<GraphEdge>& edges,
                       std::unordered_map<std::string, std::size_t>& index) {
  for (const auto& e : edges) {
    if (e.weight < 0.0) input_error("graph metric: negative edge weight");
    if (e.u.empty() || e.v.empty()) input_error("graph metric: empty vertex label");
    if (!index.count(e.u)) index.emplace(e.u, index.size());
    if (!index.count(e.v)) index.emplace(e.v, index.size());
  }
  const std::size_t v = index.size();
  if (v == 0) input_error("graph metric: empty edge list");

  const double inf = std::numeric_limits<double>::infinity();
  Matrix d(v, v, inf);
  for (std::size_t i = 0; i < v; ++i) d(i, i) = 0.0;
  for (const auto& e : edges) {
    std::size_t i = index[e.u], j = index[e.v];
    if (i == j) continue;
    d(i, j) = std::min(d(i, j), e.weight);
    d(j, i) = d(i, j);
  }

  for (std::size_t k = 0; k < v; ++k)
    for (std::size_t i = 0; i < v; ++i) {
      if (d(i, k) == inf) continue;
      for (std::size_t j = 0; j < v; ++j) {
        double via = d(i, k) + d(k, j);
        if (via < d(i, j)) d(i, j) = via;
      }
    }

  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j)
      if (d(i, j) == inf) input_error("graph metric: graph is disconnected");
  return d;
}

void check_vector_points(const std::vector<Point>& points) {
  const std::size_t dim = points.front().coords.size();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].coords.size() != dim)
      input_error("point " + std::to_string(i) + ": dimension mismatch (" +
                  std::to_string(points[i].coords.size()) + " vs " +
                  std::to_string(dim) + ")");
    for (double c : points[i].coords)
      if (!std::isfinite(c))
        input_error("point " + std::to_string(i) + ": non-finite coordinate");
  }
}

}  // namespace

double point_distance(const Point& x, const Point& y, const MetricSpec& spec) {
  if (spec.kind == MetricKind::discrete) return points_equal(x, y) ? 0.0 : 1.0;
  return vector_distance(x, y, spec);
}

DistanceMatrix build_distance_matrix(const std::vector<Point>& points,
                                     const MetricSpec& spec) {
  if (points.empty()) input_error("no points given");
  const std::size_t n = points.size();

  if (spec.kind == MetricKind::precomputed)
    input_error("precomputed metric expects a matrix file, not points");
  if (spec.kind == MetricKind::minkowski && !(spec.p >= 1.0))
    input_error("minkowski exponent must satisfy p >= 1");

  Matrix d(n, n, 0.0);
  if (spec.kind == MetricKind::graph) {
    std::unordered_map<std::string, std::size_t> index;
    Matrix g = graph_all_pairs(spec.edges, index);
    std::vector<std::size_t> at(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (points[i].label.empty())
        input_error("point " + std::to_string(i) + ": graph metric needs a label");
      auto it = index.find(points[i].label);
      if (it == index.end())
        input_error("point " + std::to_string(i) + ": label '" +
                    points[i].label + "' is not a graph vertex");
      at[i] = it->second;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d(i, j) = g(at[i], at[j]);
  } else {
    if (spec.kind == MetricKind::discrete) {
      // labels when every point has one, exact coordinate equality otherwise
      bool all_labelled = true;
      for (const auto& p : points) all_labelled = all_labelled && !p.label.empty();
      if (!all_labelled) check_vector_points(points);
    } else {
      check_vector_points(points);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        double v = point_distance(points[i], points[j], spec);
        d(i, j) = v;
        d(j, i) = v;
      }
  }
  return DistanceMatrix(std::move(d));
}

ValidationReport validate_metric(const DistanceMatrix& m, double tol,
                                 bool check_triangle) {
  ValidationReport r;
  r.triangle_checked = check_triangle;
  const std::size_t n = m.n;

  auto record = [&r](const char* what, std::size_t i, std::size_t j,
                     std::size_t k) {
    if (r.violation.empty()) {
      r.violation = what;
      r.where = {i, j, k};
    }
  };

  for (std::size_t i = 0; i < n && r.finite; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!std::isfinite(m(i, j))) {
        r.finite = false;
        record("non-finite entry", i, j, 0);
        break;
      }
  if (!r.finite) return r;  // arithmetic below would be meaningless

  for (std::size_t i = 0; i < n && r.symmetric; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(m(i, j) - m(j, i)) > tol) {
        r.symmetric = false;
        record("asymmetric entry", i, j, 0);
        break;
      }

  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(m(i, i)) > tol) {
      r.zero_diagonal = false;
      record("nonzero diagonal", i, i, 0);
      break;
    }

  for (std::size_t i = 0; i < n && r.nonnegative; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) < -tol) {
        r.nonnegative = false;
        record("negative entry", i, j, 0);
        break;
      }

  if (check_triangle) {
    for (std::size_t i = 0; i < n && r.triangle; ++i)
      for (std::size_t j = 0; j < n && r.triangle; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (m(i, j) > m(i, k) + m(k, j) + tol) {
            r.triangle = false;
            record("triangle inequality violated", i, j, k);
            break;
          }
  }
  return r;
}

}  // namespace mdcov
