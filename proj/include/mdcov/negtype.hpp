#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mdcov/eigen_sym.hpp"
#include "mdcov/measure.hpp"
#include "mdcov/metric.hpp"

namespace mdcov {

// Spectrum-based diagnosis of negative type on a finite sample. A metric
// space has negative type on the sample iff the centred quadratic form
// P d P is negative semidefinite (P the centring projector); a positive
// eigenvalue yields a concrete witness vector.
struct NegTypeReport {
  std::size_t n = 0;
  std::vector<double> eigenvalues;  // of P d P, descending
  double max_eigenvalue = 0.0;
  bool is_negative_type = true;  // on this sample; finite data can only witness
  // Witness alpha with sum(alpha) = 0 and alpha' d alpha > 0, scaled to
  // max |alpha_i| = 1; present iff the check failed. witness_form is the
  // quadratic form recomputed by a direct double loop.
  std::optional<std::vector<double>> witness;
  double witness_form = 0.0;
  // Centred unit vectors delta with |delta' d delta| <= tol * max(d).
  std::vector<std::vector<double>> null_directions;
};

struct Embedding {
  Matrix coords;  // n x r
  double reconstruction_error = 0.0;  // max |  ||phi_i - phi_j||^2 - d(i,j) |
};

NegTypeReport negative_type_check(const DistanceMatrix& m, double tol = 1e-10);

// Isometric embedding of (X, sqrt(d)) into Euclidean space, built from the
// base-point Gram kernel (d(i,o) + d(j,o) - d(i,j)) / 2. Refuses inputs
// whose Gram spectrum dips below -1e-9 * max|G|.
Embedding schoenberg_embed(const DistanceMatrix& m, std::size_t base = 0);

// Two distinct probability measures with D(nu1 - nu2) = 0, built by mixing
// a D-null direction into the uniform distribution. Empty when the sample
// shows no null direction (strong negative type as witnessed).
std::optional<std::pair<FiniteSignedMeasure, FiniteSignedMeasure>>
find_null_measure_pair(const DistanceMatrix& m);

// alpha' d alpha by direct double loop; independent of the eigensolver.
double quadratic_form(const DistanceMatrix& m, const std::vector<double>& alpha);

}  // namespace mdcov
