#include <doctest.h>

#include <cmath>

#include "mdcov/error.hpp"
#include "mdcov/inference.hpp"
#include "support.hpp"

using namespace mdcov;
using testutil::random_paired_sample;

namespace {

DistanceMatrix constant_matrix(std::size_t n) {
  return DistanceMatrix(Matrix(n, n));
}

PairedSample dependent_sample(Rng& g, std::size_t n, double noise) {
  std::vector<Point> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = g.next_double();
    xs[i].coords = {x};
    ys[i].coords = {x + noise * g.next_normal()};
  }
  return PairedSample{build_distance_matrix(xs, MetricSpec::euclidean()),
                      build_distance_matrix(ys, MetricSpec::euclidean())};
}

PairedSample independent_sample(Rng& g, std::size_t n) {
  std::vector<Point> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i].coords = {g.next_double()};
    ys[i].coords = {g.next_double()};
  }
  return PairedSample{build_distance_matrix(xs, MetricSpec::euclidean()),
                      build_distance_matrix(ys, MetricSpec::euclidean())};
}

}  // namespace

TEST_CASE("constant Y gives p = 1") {
  Rng g(60);
  PairedSample s{testutil::random_distance_matrix(g, 8, 2, MetricSpec::euclidean()),
                 constant_matrix(8)};
  auto res = permutation_test(s, StatisticKind::dcov_v, 99, 42);
  CHECK(res.p_value == 1.0);
  CHECK(res.observed == 0.0);
}

TEST_CASE("permutation test is reproducible across runs and threads") {
  Rng g(61);
  auto s = random_paired_sample(g, 8, 0);
  auto a = permutation_test(s, StatisticKind::dcov_v, 99, 7, 1);
  auto b = permutation_test(s, StatisticKind::dcov_v, 99, 7, 1);
  auto c = permutation_test(s, StatisticKind::dcov_v, 99, 7, 4);
  CHECK(a.p_value == b.p_value);
  CHECK(a.p_value == c.p_value);
  CHECK(a.observed == c.observed);

  auto d = permutation_test(s, StatisticKind::dcor_v, 99, 7, 3);
  auto e = permutation_test(s, StatisticKind::dcor_v, 99, 7, 1);
  CHECK(d.p_value == e.p_value);
}

TEST_CASE("identical samples are detected over many seeds") {
  Rng g(62);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    std::vector<Point> xs(30);
    for (auto& p : xs) p.coords = {g.next_double()};
    auto dx = build_distance_matrix(xs, MetricSpec::euclidean());
    PairedSample s{dx, dx};
    auto res = permutation_test(s, StatisticKind::dcov_v, 199, seed);
    CHECK(res.p_value <= 0.02);
  }
}

TEST_CASE("p-value bounds and guard rails") {
  Rng g(63);
  auto s = random_paired_sample(g, 8, 1);
  auto res = permutation_test(s, StatisticKind::dcov_v, 19, 1);
  CHECK(res.p_value >= 1.0 / 20.0);
  CHECK(res.p_value <= 1.0);

  CHECK_THROWS_AS(permutation_test(s, StatisticKind::dcov_v, 0, 1), Error);
  auto tiny = random_paired_sample(g, 5, 1);
  CHECK_THROWS_AS(permutation_test(tiny, StatisticKind::dcov_u, 9, 1), Error);
}

TEST_CASE("observed statistic is invariant under simultaneous relabelling") {
  Rng g(64);
  auto s = random_paired_sample(g, 10, 2);
  auto pi = g.permutation(10);
  Matrix dx(10, 10), dy(10, 10);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) {
      dx(i, j) = s.dx(pi[i], pi[j]);
      dy(i, j) = s.dy(pi[i], pi[j]);
    }
  PairedSample rel{DistanceMatrix(std::move(dx)), DistanceMatrix(std::move(dy))};
  for (auto stat : {StatisticKind::dcov_v, StatisticKind::dcov_u,
                    StatisticKind::dcor_v}) {
    auto a = permutation_test(s, stat, 1, 0);
    auto b = permutation_test(rel, stat, 1, 0);
    CHECK(std::abs(a.observed - b.observed) <= 1e-12);
  }
}

TEST_CASE("quick size sanity at moderate replication counts") {
  Rng g(65);
  int rejections = 0;
  const int datasets = 100;
  for (int rep = 0; rep < datasets; ++rep) {
    auto s = independent_sample(g, 30);
    auto res = permutation_test(s, StatisticKind::dcov_v, 99, 1000 + rep);
    if (res.p_value <= 0.05) ++rejections;
  }
  double rate = static_cast<double>(rejections) / datasets;
  CHECK(rate >= 0.0);
  CHECK(rate <= 0.13);  // loose bracket; the acceptance suite pins [0.03, 0.07]
}

TEST_CASE("power against strong dependence") {
  Rng g(66);
  int rejections = 0;
  const int datasets = 40;
  for (int rep = 0; rep < datasets; ++rep) {
    auto s = dependent_sample(g, 40, 0.1);
    auto res = permutation_test(s, StatisticKind::dcov_v, 199, 2000 + rep);
    if (res.p_value <= 0.05) ++rejections;
  }
  CHECK(rejections >= datasets - 2);
}

TEST_CASE("spectral null on constant X collapses to zero") {
  Rng g(67);
  PairedSample s{constant_matrix(6),
                 testutil::random_distance_matrix(g, 6, 2, MetricSpec::euclidean())};
  auto null_model = spectral_null(s, 25, 5);
  for (double l : null_model.lambdas) CHECK(std::abs(l) <= 1e-14);
  CHECK(null_model.offset == 0.0);
  for (double d : null_model.draws) CHECK(d == 0.0);
}

TEST_CASE("eigenvalue sum equals the trace") {
  Rng g(68);
  auto s = random_paired_sample(g, 30, 0);
  auto null_model = spectral_null(s, 0, 1);
  double lambda_sum = 0.0;
  for (double l : null_model.lambdas) lambda_sum += l;
  auto diag = sum_lambda_diagnostic(s);
  CHECK(std::abs(lambda_sum - diag.trace) <= 1e-8 * (1.0 + std::abs(diag.trace)));
}

TEST_CASE("spectral draws average to the offset") {
  Rng g(69);
  auto s = independent_sample(g, 40);
  auto null_model = spectral_null(s, 20000, 3);
  double mean = 0.0;
  for (double d : null_model.draws) mean += d;
  mean /= static_cast<double>(null_model.draws.size());
  double var = 0.0;
  for (double d : null_model.draws) var += (d - mean) * (d - mean);
  var /= static_cast<double>(null_model.draws.size() - 1);
  double se = std::sqrt(var / static_cast<double>(null_model.draws.size()));
  CHECK(std::abs(mean - null_model.offset) <= 4.0 * se);
}

TEST_CASE("spectral and permutation 95% quantiles agree at n = 200") {
  Rng g(70);
  auto s = independent_sample(g, 200);
  const double n = 200.0;

  auto null_model = spectral_null(s, 4000, 11);
  double q_spectral = testutil::quantile(null_model.draws, 0.95);

  std::vector<double> perm_stats;
  Matrix a = v_center(s.dx).m;
  Matrix b = v_center(s.dy).m;
  for (int r = 0; r < 2000; ++r) {
    Rng pg(12345, static_cast<std::uint64_t>(r));
    auto pi = pg.permutation(200);
    CompensatedSum acc;
    for (std::size_t i = 0; i < 200; ++i)
      for (std::size_t j = 0; j < 200; ++j)
        acc.add(a(i, j) * b(pi[i], pi[j]));
    perm_stats.push_back(n * acc.value() / (n * n));
  }
  double q_perm = testutil::quantile(perm_stats, 0.95);
  CHECK(std::abs(q_spectral - q_perm) <= 0.15 * std::abs(q_perm));
}

TEST_CASE("sum-lambda diagnostic values") {
  Rng g(71);
  PairedSample s{constant_matrix(5),
                 testutil::random_distance_matrix(g, 5, 2, MetricSpec::euclidean())};
  auto diag = sum_lambda_diagnostic(s);
  CHECK(diag.trace == 0.0);
  CHECK(diag.offset == 0.0);
  CHECK(diag.relative_gap == 0.0);
}

TEST_CASE("sum-lambda relative gap shrinks with n") {
  Rng g(72);
  std::vector<double> gap_small, gap_large;
  for (int rep = 0; rep < 20; ++rep) {
    gap_small.push_back(sum_lambda_diagnostic(independent_sample(g, 100)).relative_gap);
    gap_large.push_back(sum_lambda_diagnostic(independent_sample(g, 500)).relative_gap);
  }
  CHECK(testutil::median(gap_large) < testutil::median(gap_small));
}

TEST_CASE("statistic names round-trip") {
  CHECK(statistic_from_name("dcov_v") == StatisticKind::dcov_v);
  CHECK(statistic_from_name("dcov_u") == StatisticKind::dcov_u);
  CHECK(statistic_from_name("dcor_v") == StatisticKind::dcor_v);
  CHECK_THROWS_AS(statistic_from_name("pearson"), Error);
  CHECK(std::string(statistic_name(StatisticKind::dcov_u)) == "dcov_u");
}
