#pragma once

#include <vector>

#include "mdcov/matrix.hpp"

namespace mdcov {

struct EigenDecomposition {
  std::vector<double> values;  // descending
  Matrix vectors;              // column k pairs with values[k]; orthonormal
};

// Cyclic Jacobi eigensolver for symmetric matrices. Input must be
// symmetric within 1e-9 (relative to its largest entry); residuals
// ||M v - lambda v|| stay below 1e-8 (1 + ||M||).
EigenDecomposition symmetric_eigen(const Matrix& m);

}  // namespace mdcov
