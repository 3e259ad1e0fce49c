#pragma once

#include <utility>
#include <vector>

#include "mdcov/matrix.hpp"
#include "mdcov/metric.hpp"

namespace mdcov {

// Finite-support signed measure: mass w[i] sits on support point i of the
// metric space described by `space`. A probability measure additionally
// has w >= 0 and sum(w) = 1 (within kProbTol).
struct FiniteSignedMeasure {
  DistanceMatrix space;
  std::vector<double> w;

  std::size_t size() const { return w.size(); }
};

// Joint measure on a product of two finite metric spaces; w(i, j) is the
// mass on (x_i, y_j). Marginals are row/column sums.
struct FiniteJointMeasure {
  DistanceMatrix space_x;
  DistanceMatrix space_y;
  Matrix w;

  FiniteSignedMeasure marginal_x() const;
  FiniteSignedMeasure marginal_y() const;
};

inline constexpr double kProbTol = 1e-12;

// Throws unless sizes are consistent, weights finite, and support points
// with nonzero mass are pairwise distinct (off-diagonal distance > 0).
void validate_measure(const FiniteSignedMeasure& m);

bool is_probability(const FiniteSignedMeasure& m, double tol = kProbTol);
bool is_probability(const FiniteJointMeasure& t, double tol = kProbTol);
void require_probability(const FiniteSignedMeasure& m);
void require_probability(const FiniteJointMeasure& t);

// Componentwise positive/negative parts; m = plus - minus with disjoint
// supports.
std::pair<FiniteSignedMeasure, FiniteSignedMeasure> hahn_jordan(
    const FiniteSignedMeasure& m);

// Expected distance from support point i to a point drawn from m.
double a_mu(const FiniteSignedMeasure& m, std::size_t i);

// Mean pairwise distance under m x m; a quadratic form for signed m.
double big_d(const FiniteSignedMeasure& m);

// Doubly centred distance d(i,j) - a_mu(i) - a_mu(j) + D(m); probability
// measures only.
double d_mu(const FiniteSignedMeasure& m, std::size_t i, std::size_t j);

// Full table of d_mu values (probability measures only).
Matrix d_mu_matrix(const FiniteSignedMeasure& m);

// Difference a - b of two measures sharing the same support.
FiniteSignedMeasure measure_difference(const FiniteSignedMeasure& a,
                                       const FiniteSignedMeasure& b);

double population_dcov(const FiniteJointMeasure& t);
double population_dvar(const FiniteSignedMeasure& m);
double population_dcor(const FiniteJointMeasure& t);

FiniteJointMeasure product_measure(const FiniteSignedMeasure& m,
                                   const FiniteSignedMeasure& n);

// theta = (delta_{x0} x nu1 + delta_{x1} x nu2) / 2: a dependent joint
// measure with zero distance covariance. Requires nu1 != nu2 on a shared
// support with |D(nu1 - nu2)| <= 1e-10, and at least two distinct points
// in space_x; anything else means the Y space is not a valid witness.
FiniteJointMeasure construct_counterexample(const DistanceMatrix& space_x,
                                            const FiniteSignedMeasure& nu1,
                                            const FiniteSignedMeasure& nu2);

}  // namespace mdcov
