#include "mdcov/inference.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "mdcov/eigen_sym.hpp"
#include "mdcov/error.hpp"
#include "mdcov/rng.hpp"

namespace mdcov {

const char* statistic_name(StatisticKind k) {
  switch (k) {
    case StatisticKind::dcov_v:
      return "dcov_v";
    case StatisticKind::dcov_u:
      return "dcov_u";
    case StatisticKind::dcor_v:
      return "dcor_v";
  }
  return "?";
}

StatisticKind statistic_from_name(const std::string& name) {
  if (name == "dcov_v") return StatisticKind::dcov_v;
  if (name == "dcov_u") return StatisticKind::dcov_u;
  if (name == "dcor_v") return StatisticKind::dcor_v;
  input_error("unknown statistic '" + name + "'");
}

namespace {

// Cached state for one permutation test: both centred matrices plus the
// permutation-invariant normalisation.
struct PermutationPlan {
  Matrix a;
  Matrix b;
  bool u_centred = false;
  double norm = 1.0;         // 1/n^2 or 1/(n(n-3))
  double denominator = 1.0;  // sqrt(dvar_x dvar_y) for dcor_v, else 1
};

PermutationPlan make_plan(const PairedSample& s, StatisticKind stat) {
  PermutationPlan plan;
  const double n = static_cast<double>(s.n());
  switch (stat) {
    case StatisticKind::dcov_v:
      plan.a = v_center(s.dx).m;
      plan.b = v_center(s.dy).m;
      plan.norm = 1.0 / (n * n);
      break;
    case StatisticKind::dcov_u:
      plan.a = u_center(s.dx).m;
      plan.b = u_center(s.dy).m;
      plan.u_centred = true;
      plan.norm = 1.0 / (n * (n - 3.0));
      break;
    case StatisticKind::dcor_v: {
      plan.a = v_center(s.dx).m;
      plan.b = v_center(s.dy).m;
      plan.norm = 1.0 / (n * n);
      double vx = dvar_v(s.dx);
      double vy = dvar_v(s.dy);
      // dvar is invariant under relabelling Y, so the denominator is
      // computed once; zero variance pins every statistic to 0
      plan.denominator = (vx <= 0.0 || vy <= 0.0) ? 0.0 : std::sqrt(vx * vy);
      break;
    }
  }
  return plan;
}

double plan_statistic(const PermutationPlan& plan,
                      const std::vector<std::size_t>& pi) {
  const std::size_t n = plan.a.nrow;
  CompensatedSum s;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (plan.u_centred && i == j) continue;
      s.add(plan.a(i, j) * plan.b(pi[i], pi[j]));
    }
  double value = s.value() * plan.norm;
  if (plan.denominator == 0.0) return 0.0;
  return plan.denominator == 1.0 ? value : value / plan.denominator;
}

}  // namespace

TestResult permutation_test(const PairedSample& s, StatisticKind stat, int R,
                            std::uint64_t seed, int threads) {
  require_paired(s);
  if (R < 1) precondition_error("permutation test needs R >= 1");
  const std::size_t n = s.n();
  if (n < 2) precondition_error("permutation test needs n >= 2");
  if (stat == StatisticKind::dcov_u && n < 6)
    precondition_error("dcov_u needs n >= 6");

  PermutationPlan plan = make_plan(s, stat);
  std::vector<std::size_t> identity(n);
  for (std::size_t i = 0; i < n; ++i) identity[i] = i;
  const double observed = plan_statistic(plan, identity);

  const int workers = std::max(1, std::min(threads, R));
  std::atomic<long> exceed{0};
  auto run_block = [&](int lo, int hi) {
    long local = 0;
    for (int r = lo; r < hi; ++r) {
      Rng g(seed, static_cast<std::uint64_t>(r));
      std::vector<std::size_t> pi = g.permutation(n);
      if (plan_statistic(plan, pi) >= observed) ++local;
    }
    exceed += local;
  };
  if (workers == 1) {
    run_block(0, R);
  } else {
    std::vector<std::thread> pool;
    int chunk = (R + workers - 1) / workers;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back(run_block, w * chunk, std::min(R, (w + 1) * chunk));
    for (auto& th : pool) th.join();
  }

  TestResult out;
  out.statistic = stat;
  out.observed = observed;
  out.p_value = (1.0 + static_cast<double>(exceed.load())) /
                (1.0 + static_cast<double>(R));
  out.replications = R;
  out.seed = seed;
  out.method = "permutation";
  return out;
}

SpectralNull spectral_null(const PairedSample& s, int n_draws,
                           std::uint64_t seed) {
  require_paired(s);
  const std::size_t n = s.n();
  if (n < 2) precondition_error("spectral_null needs n >= 2");
  if (n_draws < 0) precondition_error("n_draws must be nonnegative");

  Matrix a = v_center(s.dx).m;
  Matrix b = v_center(s.dy).m;
  Matrix prod(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      prod(i, j) = a(i, j) * b(i, j) / static_cast<double>(n);

  SpectralNull out;
  out.lambdas = symmetric_eigen(prod).values;

  CompensatedSum gx, gy;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      gx.add(s.dx(i, j));
      gy.add(s.dy(i, j));
    }
  const double nn = static_cast<double>(n) * static_cast<double>(n);
  out.offset = (gx.value() / nn) * (gy.value() / nn);

  out.draws.resize(static_cast<std::size_t>(n_draws));
  for (int k = 0; k < n_draws; ++k) {
    Rng g(seed, static_cast<std::uint64_t>(k));
    double sum = out.offset;
    for (double lambda : out.lambdas) {
      double z = g.next_normal();
      sum += lambda * (z * z - 1.0);
    }
    out.draws[static_cast<std::size_t>(k)] = sum;
  }
  return out;
}

SumLambdaDiagnostic sum_lambda_diagnostic(const PairedSample& s) {
  require_paired(s);
  const std::size_t n = s.n();
  if (n < 2) precondition_error("sum_lambda_diagnostic needs n >= 2");

  Matrix a = v_center(s.dx).m;
  Matrix b = v_center(s.dy).m;
  CompensatedSum tr, gx, gy;
  for (std::size_t i = 0; i < n; ++i) {
    tr.add(a(i, i) * b(i, i));
    for (std::size_t j = 0; j < n; ++j) {
      gx.add(s.dx(i, j));
      gy.add(s.dy(i, j));
    }
  }
  const double nn = static_cast<double>(n) * static_cast<double>(n);
  SumLambdaDiagnostic out;
  out.trace = tr.value() / static_cast<double>(n);
  out.offset = (gx.value() / nn) * (gy.value() / nn);
  out.relative_gap = std::abs(out.trace - out.offset) / std::max(out.offset, 1e-12);
  return out;
}

}  // namespace mdcov
