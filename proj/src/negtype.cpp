#include "mdcov/negtype.hpp"

#include <cmath>
#include <string>

#include "mdcov/error.hpp"
#include "mdcov/estimators.hpp"

namespace mdcov {

namespace {

void require_valid_metric(const DistanceMatrix& m) {
  ValidationReport rep = validate_metric(m, 1e-9, true);
  if (!rep.pass())
    precondition_error("invalid metric: " + rep.violation + " at (" +
                       std::to_string(rep.where[0]) + ", " +
                       std::to_string(rep.where[1]) + ")");
}

void center_exactly(std::vector<double>& v) {
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  for (double& x : v) x -= mean;
}

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

double quadratic_form(const DistanceMatrix& m, const std::vector<double>& alpha) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) s += alpha[i] * alpha[j] * m(i, j);
  return s;
}

NegTypeReport negative_type_check(const DistanceMatrix& m, double tol) {
  require_valid_metric(m);
  const std::size_t n = m.n;

  // P d P is exactly the V-centred matrix
  Matrix centred = v_center(m).m;
  EigenDecomposition eig = symmetric_eigen(centred);

  NegTypeReport rep;
  rep.n = n;
  rep.eigenvalues = eig.values;
  rep.max_eigenvalue = eig.values.empty() ? 0.0 : eig.values.front();
  const double threshold = tol * m.max_entry();
  rep.is_negative_type = rep.max_eigenvalue <= threshold;

  if (!rep.is_negative_type) {
    std::vector<double> alpha(n);
    for (std::size_t i = 0; i < n; ++i) alpha[i] = eig.vectors(i, 0);
    center_exactly(alpha);
    // scale to max |alpha_i| = 1, sign so the largest entry is positive
    std::size_t arg = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (std::abs(alpha[i]) > std::abs(alpha[arg])) arg = i;
    double s = alpha[arg];
    for (double& x : alpha) x /= s;
    rep.witness_form = quadratic_form(m, alpha);
    rep.witness = std::move(alpha);
  }

  // The near-zero eigenspace always contains the all-ones direction, which
  // the centring projector kills; whatever survives the projection is a
  // genuine D-null direction. Modified Gram-Schmidt with pivoting keeps
  // the surviving vectors orthonormal.
  std::vector<std::vector<double>> candidates;
  for (std::size_t k = 0; k < n; ++k) {
    if (std::abs(eig.values[k]) > threshold) continue;
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = eig.vectors(i, k);
    center_exactly(v);
    candidates.push_back(std::move(v));
  }
  while (!candidates.empty()) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < candidates.size(); ++c)
      if (norm2(candidates[c]) > norm2(candidates[best])) best = c;
    double len = norm2(candidates[best]);
    if (len <= 1e-6) break;
    std::vector<double> dir = candidates[best];
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(best));
    for (double& x : dir) x /= len;
    if (std::abs(quadratic_form(m, dir)) <= std::max(threshold, 1e-12))
      rep.null_directions.push_back(dir);
    for (auto& c : candidates) {
      double dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += c[i] * dir[i];
      for (std::size_t i = 0; i < n; ++i) c[i] -= dot * dir[i];
    }
  }
  return rep;
}

Embedding schoenberg_embed(const DistanceMatrix& m, std::size_t base) {
  require_valid_metric(m);
  const std::size_t n = m.n;
  if (base >= n) input_error("schoenberg_embed: base index out of range");

  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      gram(i, j) = 0.5 * (m(i, base) + m(j, base) - m(i, j));

  EigenDecomposition eig = symmetric_eigen(gram);
  const double clamp_tol = 1e-9 * std::max(max_abs(gram), 1e-300);
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < n; ++k) {
    if (eig.values[k] < -clamp_tol)
      precondition_error(
          "schoenberg_embed: Gram eigenvalue " + std::to_string(eig.values[k]) +
          " < 0; the space is not of negative type on this sample");
    if (eig.values[k] > 0.0) kept.push_back(k);  // [-clamp_tol, 0) clamps to 0
  }

  Embedding out;
  out.coords = Matrix(n, kept.size());
  for (std::size_t c = 0; c < kept.size(); ++c) {
    double root = std::sqrt(eig.values[kept[c]]);
    for (std::size_t i = 0; i < n; ++i)
      out.coords(i, c) = eig.vectors(i, kept[c]) * root;
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double sq = 0.0;
      for (std::size_t c = 0; c < kept.size(); ++c) {
        double diff = out.coords(i, c) - out.coords(j, c);
        sq += diff * diff;
      }
      out.reconstruction_error =
          std::max(out.reconstruction_error, std::abs(sq - m(i, j)));
    }
  return out;
}

std::optional<std::pair<FiniteSignedMeasure, FiniteSignedMeasure>>
find_null_measure_pair(const DistanceMatrix& m) {
  NegTypeReport rep = negative_type_check(m);
  if (!rep.is_negative_type)
    precondition_error(
        "find_null_measure_pair: sample is not of negative type; the strong "
        "negative type question does not arise");
  if (rep.null_directions.empty()) return std::nullopt;

  const std::vector<double>& delta = rep.null_directions.front();
  const std::size_t n = m.n;
  double peak = 0.0;
  for (double x : delta) peak = std::max(peak, std::abs(x));
  // largest step keeping both mixtures nonnegative, halved for margin
  double t = 1.0 / (2.0 * static_cast<double>(n) * peak);

  FiniteSignedMeasure nu1{m, std::vector<double>(n)};
  FiniteSignedMeasure nu2{m, std::vector<double>(n)};
  const double uniform = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    nu1.w[i] = uniform + t * delta[i];
    nu2.w[i] = uniform - t * delta[i];
  }
  return std::make_pair(std::move(nu1), std::move(nu2));
}

}  // namespace mdcov
