#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mdcov/estimators.hpp"

namespace mdcov {

enum class StatisticKind { dcov_v, dcov_u, dcor_v };

const char* statistic_name(StatisticKind k);
StatisticKind statistic_from_name(const std::string& name);

struct TestResult {
  StatisticKind statistic = StatisticKind::dcov_v;
  double observed = 0.0;
  double p_value = 1.0;
  int replications = 0;
  std::uint64_t seed = 0;
  std::string method = "permutation";
};

// Seeded permutation test of independence. Centred matrices are computed
// once; each replication re-indexes the Y side through a fresh
// Fisher-Yates permutation drawn from the (seed, replication) stream, so
// p-values are identical for any thread count. p = (1 + #{T_r >= T_obs})
// / (1 + R); ties count as exceedances.
TestResult permutation_test(const PairedSample& s, StatisticKind stat, int R,
                            std::uint64_t seed, int threads = 1);

struct SpectralNull {
  std::vector<double> lambdas;  // eigenvalues of (1/n) A.B, descending
  double offset = 0.0;          // grand-mean product D(mu) D(nu)
  std::vector<double> draws;    // simulated sum lambda_i (Z_i^2 - 1) + offset
};

// Experimental chi-square-mixture approximation to the null law of
// n * dcov_v; cross-check against the permutation distribution before
// trusting it.
SpectralNull spectral_null(const PairedSample& s, int n_draws,
                           std::uint64_t seed);

struct SumLambdaDiagnostic {
  double trace = 0.0;         // trace of (1/n) A.B = sum of its eigenvalues
  double offset = 0.0;        // D(mu) D(nu) estimated by grand means
  double relative_gap = 0.0;  // |trace - offset| / max(offset, 1e-12)
};

// Reports how closely the eigenvalue sum tracks D(mu) D(nu); a diagnostic,
// not an assertion -- the identity is only expected under negative type.
SumLambdaDiagnostic sum_lambda_diagnostic(const PairedSample& s);

}  // namespace mdcov
