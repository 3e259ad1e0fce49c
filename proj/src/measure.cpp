#include "mdcov/measure.hpp"

#include <cmath>
#include <string>

#include "mdcov/error.hpp"

namespace mdcov {

FiniteSignedMeasure FiniteJointMeasure::marginal_x() const {
  FiniteSignedMeasure m{space_x, std::vector<double>(w.nrow, 0.0)};
  for (std::size_t i = 0; i < w.nrow; ++i)
    for (std::size_t j = 0; j < w.ncol; ++j) m.w[i] += w(i, j);
  return m;
}

FiniteSignedMeasure FiniteJointMeasure::marginal_y() const {
  FiniteSignedMeasure m{space_y, std::vector<double>(w.ncol, 0.0)};
  for (std::size_t i = 0; i < w.nrow; ++i)
    for (std::size_t j = 0; j < w.ncol; ++j) m.w[j] += w(i, j);
  return m;
}

void validate_measure(const FiniteSignedMeasure& m) {
  if (m.w.size() != m.space.n)
    input_error("measure: " + std::to_string(m.w.size()) + " weights for " +
                std::to_string(m.space.n) + " support points");
  for (double x : m.w)
    if (!std::isfinite(x)) input_error("measure: non-finite weight");
  // zero-weight atoms are pruned before the distinctness check, so shared
  // supports remain usable for signed arithmetic like nu1 - nu2
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m.w[i] != 0.0 && m.w[j] != 0.0 && !(m.space(i, j) > 0.0))
        input_error("measure: support points " + std::to_string(i) + " and " +
                    std::to_string(j) + " coincide");
}

bool is_probability(const FiniteSignedMeasure& m, double tol) {
  double total = 0.0;
  for (double x : m.w) {
    if (!(x >= 0.0)) return false;
    total += x;
  }
  return std::abs(total - 1.0) <= tol;
}

bool is_probability(const FiniteJointMeasure& t, double tol) {
  double total = 0.0;
  for (double x : t.w.a) {
    if (!(x >= 0.0)) return false;
    total += x;
  }
  return std::abs(total - 1.0) <= tol;
}

void require_probability(const FiniteSignedMeasure& m) {
  if (!is_probability(m)) precondition_error("not a probability measure");
}

void require_probability(const FiniteJointMeasure& t) {
  if (!is_probability(t)) precondition_error("not a probability measure");
}

std::pair<FiniteSignedMeasure, FiniteSignedMeasure> hahn_jordan(
    const FiniteSignedMeasure& m) {
  FiniteSignedMeasure plus{m.space, std::vector<double>(m.size(), 0.0)};
  FiniteSignedMeasure minus{m.space, std::vector<double>(m.size(), 0.0)};
  for (std::size_t i = 0; i < m.size(); ++i) {
    plus.w[i] = std::max(m.w[i], 0.0);
    minus.w[i] = std::max(-m.w[i], 0.0);
  }
  return {std::move(plus), std::move(minus)};
}

double a_mu(const FiniteSignedMeasure& m, std::size_t i) {
  if (i >= m.size()) input_error("a_mu: support index out of range");
  double s = 0.0;
  for (std::size_t j = 0; j < m.size(); ++j) s += m.space(i, j) * m.w[j];
  return s;
}

double big_d(const FiniteSignedMeasure& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      s += m.w[i] * m.w[j] * m.space(i, j);
  return s;
}

double d_mu(const FiniteSignedMeasure& m, std::size_t i, std::size_t j) {
  require_probability(m);
  if (i >= m.size() || j >= m.size())
    input_error("d_mu: support index out of range");
  return m.space(i, j) - a_mu(m, i) - a_mu(m, j) + big_d(m);
}

Matrix d_mu_matrix(const FiniteSignedMeasure& m) {
  require_probability(m);
  const std::size_t k = m.size();
  std::vector<double> a(k);
  for (std::size_t i = 0; i < k; ++i) a[i] = a_mu(m, i);
  double d = big_d(m);
  Matrix out(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      out(i, j) = m.space(i, j) - a[i] - a[j] + d;
  return out;
}

FiniteSignedMeasure measure_difference(const FiniteSignedMeasure& a,
                                       const FiniteSignedMeasure& b) {
  if (a.size() != b.size())
    input_error("measure difference: supports of unequal size");
  FiniteSignedMeasure out{a.space, std::vector<double>(a.size())};
  for (std::size_t i = 0; i < a.size(); ++i) out.w[i] = a.w[i] - b.w[i];
  return out;
}

double population_dcov(const FiniteJointMeasure& t) {
  require_probability(t);
  Matrix dmx = d_mu_matrix(t.marginal_x());
  Matrix dmy = d_mu_matrix(t.marginal_y());
  const std::size_t k1 = t.w.nrow, k2 = t.w.ncol;
  double s = 0.0;
  for (std::size_t i = 0; i < k1; ++i)
    for (std::size_t j = 0; j < k2; ++j) {
      double wij = t.w(i, j);
      if (wij == 0.0) continue;
      for (std::size_t i2 = 0; i2 < k1; ++i2)
        for (std::size_t j2 = 0; j2 < k2; ++j2)
          s += dmx(i, i2) * dmy(j, j2) * wij * t.w(i2, j2);
    }
  return s;
}

double population_dvar(const FiniteSignedMeasure& m) {
  Matrix dm = d_mu_matrix(m);  // checks the probability precondition
  double s = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      s += dm(i, j) * dm(i, j) * m.w[i] * m.w[j];
  return s;
}

double population_dcor(const FiniteJointMeasure& t) {
  double vx = population_dvar(t.marginal_x());
  double vy = population_dvar(t.marginal_y());
  if (vx <= 0.0 || vy <= 0.0) return 0.0;
  return population_dcov(t) / std::sqrt(vx * vy);
}

FiniteJointMeasure product_measure(const FiniteSignedMeasure& m,
                                   const FiniteSignedMeasure& n) {
  require_probability(m);
  require_probability(n);
  FiniteJointMeasure t{m.space, n.space, Matrix(m.size(), n.size())};
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < n.size(); ++j) t.w(i, j) = m.w[i] * n.w[j];
  return t;
}

FiniteJointMeasure construct_counterexample(const DistanceMatrix& space_x,
                                            const FiniteSignedMeasure& nu1,
                                            const FiniteSignedMeasure& nu2) {
  require_probability(nu1);
  require_probability(nu2);
  if (nu1.size() != nu2.size() || nu1.space.d.a != nu2.space.d.a)
    input_error("counterexample: nu1 and nu2 must share one support space");
  if (space_x.n < 2 || !(space_x(0, 1) > 0.0))
    precondition_error("counterexample: X space needs two distinct points");

  double sup = 0.0;
  for (std::size_t i = 0; i < nu1.size(); ++i)
    sup = std::max(sup, std::abs(nu1.w[i] - nu2.w[i]));
  if (sup <= 1e-12)
    precondition_error("counterexample: nu1 and nu2 are not distinct");

  double dd = big_d(measure_difference(nu1, nu2));
  if (std::abs(dd) > 1e-10)
    precondition_error(
        "counterexample: D(nu1 - nu2) = " + std::to_string(dd) +
        " is not zero; the Y space offers no null direction here");

  FiniteJointMeasure theta{space_x, nu1.space, Matrix(space_x.n, nu1.size())};
  for (std::size_t j = 0; j < nu1.size(); ++j) {
    theta.w(0, j) = 0.5 * nu1.w[j];
    theta.w(1, j) = 0.5 * nu2.w[j];
  }
  return theta;
}

}  // namespace mdcov
