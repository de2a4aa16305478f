// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "cli.hpp"
#include "lf/checks.hpp"
#include "lf/convolution.hpp"
#include "lf/euler.hpp"
#include "lf/fit.hpp"
#include "lf/grid.hpp"
#include "lf/lambda.hpp"
#include "lf/multiplicative.hpp"
#include "lf/roots.hpp"
#include "lf/sums.hpp"
#include "lf/values.hpp"
#include "lf/verify.hpp"

using namespace lf;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome defining_identity() {
  const auto t0 = Clock::now();
  const std::uint64_t N = 100'000;
  const MultiplicativeFunction fs[] = {catalog::one(),     catalog::mu_sq(),
                                       catalog::tau(2),    catalog::tau(3),
                                       catalog::ind_1mod4(), catalog::sf_const(0.5)};
  double worst = 0.0;
  for (const auto& f : fs) {
    const auto fv = sieve_values(f, N);
    for (int h = 1; h <= 4; ++h) {
      const auto rhs = dirichlet_convolve(fv, lambda_fh(f, h, N));
      for (std::uint64_t n = 1; n <= N; ++n) {
        const double lhs = fv[n] * std::pow(std::log(static_cast<double>(n)), h);
        worst = std::max(worst, std::fabs(lhs - rhs[n]) / std::max(1.0, std::fabs(lhs)));
      }
    }
  }
  const double t = seconds_since(t0);
  return {worst <= 1e-9 && t <= 60.0, fmt::format("max relative residual {:.3g}, {:.1f} s", worst, t)};
}

Outcome classical_von_mangoldt() {
  const auto table = lambda_table(catalog::one(), 1'000'000);
  double worst = 0.0;
  for (const auto& e : table.entries()) {
    worst = std::max(worst, std::fabs(e.value - std::log(static_cast<double>(e.p))));
  }
  return {worst <= 1e-12, fmt::format("{} prime powers, max error {:.3g}", table.size(), worst)};
}

Outcome squarefree_closed_form() {
  double worst = 0.0;
  for (double c : {0.3, 1.0, 2.0}) {
    const auto table = lambda_table(catalog::sf_const(c), 10'000);
    for (const auto& e : table.entries()) {
      const double expect = (e.m % 2 ? 1.0 : -1.0) * std::pow(c, e.m) * std::log(static_cast<double>(e.p));
      worst = std::max(worst, std::fabs(e.value - expect));
    }
  }
  return {worst <= 1e-12, fmt::format("max error {:.3g}", worst)};
}

Outcome selberg() {
  const std::uint64_t N = 100'000;
  const auto lam = lambda_sequence(catalog::one(), N);
  const auto ll = dirichlet_convolve(lam, lam);
  const auto l2 = lambda_fh(catalog::one(), 2, N);
  double worst = 0.0;
  for (std::uint64_t n = 1; n <= N; ++n) {
    const double rhs = lam[n] * std::log(static_cast<double>(n)) + ll[n];
    worst = std::max(worst, std::fabs(l2[n] - rhs));
  }
  return {worst <= 1e-9, fmt::format("max error {:.3g}", worst)};
}

Outcome giter() {
  double worst = 0.0;
  for (const auto& f : {catalog::one(), catalog::mu_sq()}) {
    for (int k = 1; k <= 3; ++k) {
      const auto c = check_giter(f, 1e4, k, 1e-8);
      worst = std::max(worst, c.residual / (1.0 + std::fabs(c.lhs)));
    }
  }
  return {worst <= 1e-6, fmt::format("max residual / (1 + |G_k|) {:.3g}", worst)};
}

Outcome reph() {
  double worst = 0.0;
  const double u = std::log(1e4);
  for (const auto& f : catalog::standard()) {
    for (int k = 0; k <= 4; ++k) worst = std::max(worst, check_reph(f, u, k).relative());
  }
  return {worst <= 1e-10, fmt::format("max relative residual {:.3g}", worst)};
}

Outcome lifeagain() {
  const auto grid = geometric_grid(1e7, {1e3, 64, 0});
  const auto sums = lambda_fh_over_n_grid(catalog::mu_sq(), 2, grid);
  const double coeff = fit_log_powers(grid, sums, {2.0, 1.0, 0.0}).coeffs[0];
  const double expect = rising_over_factorial(1.0, 2);
  return {std::fabs(coeff / expect - 1.0) <= 0.05,
          fmt::format("leading coefficient {:.6f}, expected {}", coeff, expect)};
}

Outcome desk_scale() {
  const auto t0 = Clock::now();
  const auto f = catalog::mu_sq();
  const auto grid = geometric_grid(1e8, {1e3, 64, 0});
  const auto series = measure_series(f, SeriesKind::logn_pow, 1, grid, Exec{1});
  const auto fit = fit_expansion(series, 1.0, 0, 1.0);
  const double th = theoretical_leading(f, 1.0, 0, 1'000'000);
  const double t = seconds_since(t0);
  const double gap = fit.C_hat / th - 1.0;
  return {std::fabs(gap) <= 0.05 && t <= 600.0,
          fmt::format("C_hat {:.6f}, theoretical {:.6f}, gap {:+.4f}, {:.1f} s at 1 thread", fit.C_hat,
                      th, gap, t)};
}

Outcome roots() {
  const auto r = characteristic_roots(1, 1.0).roots;
  bool ok = r.size() == 2 && std::abs(r[0] - 2.0) <= 1e-9 && std::abs(r[1] + 1.0) <= 1e-9;
  double worst = 0.0;
  for (int h = 0; h <= 3; ++h) {
    for (double kappa : {0.3, 0.5, 1.0, 2.0}) {
      std::complex<double> sum = 0.0, prod = 1.0;
      double rising = 1.0;
      for (int i = 0; i <= h; ++i) rising *= kappa + i;
      for (const auto& z : characteristic_roots(h, kappa).roots) {
        sum += z;
        prod *= z;
      }
      const double expect_sum = h == 0 ? kappa : h * (h + 1) / 2.0;
      const double expect_prod = (h % 2 == 0 ? 1.0 : -1.0) * rising;
      worst = std::max({worst, std::abs(sum - expect_sum), std::abs(prod - expect_prod)});
    }
  }
  ok = ok && worst <= 1e-8;
  return {ok, fmt::format("h=1 kappa=1 roots ({}, {}), max Vieta error {:.3g}", r[0].real(), r[1].real(),
                          worst)};
}

std::string run_cli(std::vector<std::string> args, int& code) {
  std::vector<const char*> argv{"lfa"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

Outcome determinism() {
  const std::vector<std::string> base = {"verify", "--f", "mu_sq", "--kappa", "1", "--h", "1", "--X", "1e7"};
  auto a1 = base, a8 = base;
  a1.insert(a1.end(), {"--threads", "1"});
  a8.insert(a8.end(), {"--threads", "8"});
  int c1 = 0, c8 = 0;
  const auto o1 = run_cli(a1, c1);
  const auto o8 = run_cli(a8, c8);
  return {c1 == c8 && !o1.empty() && o1 == o8,
          fmt::format("{} bytes, exit codes {} / {}, identical: {}", o1.size(), c1, c8, o1 == o8)};
}

Outcome envelope_trend() {
  const auto grid = geometric_grid(1e8, {1e3, 64, 0});
  double margins[3];
  for (int h = 0; h <= 2; ++h) margins[h] = reference_margin(h, grid);
  bool ok = true;
  std::string detail;
  for (const auto& f : catalog::standard()) {
    const double kappa = f.kappa_claimed();
    const auto sums = log_power_sums_grid(f, grid, {1, 2, 3});
    for (int h = 0; h <= 2; ++h) {
      SumSeries s{f.name(), SeriesKind::logn_pow, h + 1, grid, sums[h]};
      const auto fit = fit_expansion(s, kappa, h, margins[h]);
      std::vector<double> bounded;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        bounded.push_back(std::fabs(fit.residuals[i]) / std::pow(std::log(grid[i]), kappa));
      }
      const auto trend = kendall_trend(bounded);
      const bool this_ok = fit.envelope_ok && trend.p_increasing >= 0.05;
      std::printf("    %-14s h=%d  max scaled residual %.3g (margin %.3g)  envelope_ok %d  kendall p %.3g\n",
                  f.name().c_str(), h, fit.max_scaled_residual, margins[h], fit.envelope_ok,
                  trend.p_increasing);
      if (!this_ok) {
        ok = false;
        detail += fmt::format("{}:h={} ", f.name(), h);
      }
    }
  }
  return {ok, ok ? "all catalog functions, h <= 2, X <= 1e8" : "fails for " + detail};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"defining identity f log^h = f * Lambda_{f,h}", defining_identity},
      {"f = 1 gives the classical von Mangoldt function", classical_von_mangoldt},
      {"squarefree closed form", squarefree_closed_form},
      {"Selberg symmetry formula", selberg},
      {"G_k integral recursion", giter},
      {"binomial reparametrisation", reph},
      {"leading coefficient of sum Lambda_{f,2}(n)/n", lifeagain},
      {"leading constant for mu^2 up to 1e8", desk_scale},
      {"characteristic roots", roots},
      {"byte-identical verify output across thread counts", determinism},
      {"error envelope and bounded residual trend", envelope_trend},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
