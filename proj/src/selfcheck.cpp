#include "lf/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <numeric>
#include <random>

#include <fmt/format.h>

#include "lf/checks.hpp"
#include "lf/convolution.hpp"
#include "lf/euler.hpp"
#include "lf/faa.hpp"
#include "lf/fit.hpp"
#include "lf/grid.hpp"
#include "lf/kahan.hpp"
#include "lf/lambda.hpp"
#include "lf/multiplicative.hpp"
#include "lf/reference.hpp"
#include "lf/roots.hpp"
#include "lf/values.hpp"

namespace lf {
namespace {

bool is_prime_power(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      return n == 1;
    }
  }
  return n > 1;
}

// Each check returns an empty string on success, otherwise a description.
using Check = std::function<std::string()>;

}  // namespace

std::vector<PropertyResult> run_selfcheck(std::uint64_t n_max, Exec exec) {
  const auto fs = catalog::standard();
  std::vector<std::pair<std::string, Check>> checks;

  checks.emplace_back("multiplicativity", [&]() -> std::string {
    std::mt19937_64 rng(12345);
    const std::uint64_t N = std::min<std::uint64_t>(n_max, 10'000);
    for (const auto& f : fs) {
      const auto v = sieve_values(f, N, exec);
      std::uniform_int_distribution<std::uint64_t> pick(1, N);
      for (int trial = 0; trial < 2000; ++trial) {
        const std::uint64_t m = pick(rng);
        const std::uint64_t n = pick(rng) % (N / m) + 1;
        if (std::gcd(m, n) != 1) continue;
        if (v[m * n] != v[m] * v[n]) return fmt::format("{}: f({}*{})", f.name(), m, n);
      }
    }
    return {};
  });

  checks.emplace_back("sieve_matches_support_enumeration", [&]() -> std::string {
    for (const auto& f : fs) {
      const auto v = sieve_values(f, n_max, exec);
      std::uint64_t visited = 0;
      std::string err;
      enumerate_support(f, n_max, [&](std::uint64_t n, double fn) {
        ++visited;
        if (err.empty() && v[n] != fn) err = fmt::format("{}: n = {}", f.name(), n);
      });
      if (!err.empty()) return err;
      const auto nonzero = static_cast<std::uint64_t>(
          std::count_if(v.values().begin(), v.values().end(), [](double x) { return x != 0.0; }));
      if (nonzero != visited) return fmt::format("{}: support size differs", f.name());
    }
    return {};
  });

  checks.emplace_back("catalog_non_negative", [&]() -> std::string {
    for (const auto& f : fs) {
      const auto v = sieve_values(f, n_max, exec);
      for (std::uint64_t n = 1; n <= n_max; ++n) {
        if (!(v[n] >= 0.0)) return fmt::format("{}: f({}) < 0", f.name(), n);
      }
    }
    return {};
  });

  checks.emplace_back("lambda_recursion", [&]() -> std::string {
    for (const auto& f : fs) {
      const auto table = lambda_table(f, n_max, exec);
      for (const auto& e : table.entries()) {
        double rhs = 0.0;
        for (unsigned j = 1; j <= e.m; ++j) rhs += table.at(e.p, j) * f.local(e.p, e.m - j);
        const double lhs = e.m * f.local(e.p, e.m) * std::log(static_cast<double>(e.p));
        if (std::fabs(lhs - rhs) > 1e-12 * std::max(1.0, std::fabs(lhs))) {
          return fmt::format("{}: {}^{}", f.name(), e.p, e.m);
        }
      }
    }
    return {};
  });

  checks.emplace_back("defining_identity_h1_to_4", [&]() -> std::string {
    for (const auto& f : fs) {
      const auto values = sieve_values(f, n_max, exec);
      for (int h = 1; h <= 4; ++h) {
        const auto conv = dirichlet_convolve(values, lambda_fh(f, h, n_max, exec), exec);
        for (std::uint64_t n = 1; n <= n_max; ++n) {
          const double lhs = values[n] * std::pow(std::log(static_cast<double>(n)), h);
          if (std::fabs(lhs - conv[n]) > 1e-9 * (1.0 + std::fabs(lhs))) {
            return fmt::format("{} h = {}: n = {}", f.name(), h, n);
          }
        }
      }
    }
    return {};
  });

  checks.emplace_back("selberg_symmetry", [&]() -> std::string {
    const auto one = catalog::one();
    const auto lam = lambda_sequence(one, n_max, exec);
    const auto ll = dirichlet_convolve(lam, lam, exec);
    const auto l2 = lambda_fh(one, 2, n_max, exec);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      const double expect = lam[n] * std::log(static_cast<double>(n)) + ll[n];
      if (std::fabs(l2[n] - expect) > 1e-9) return fmt::format("n = {}", n);
    }
    return {};
  });

  checks.emplace_back("partition_counts", []() -> std::string {
    const std::size_t expected[] = {1, 2, 3, 5, 7, 11};
    for (int h = 1; h <= 6; ++h) {
      if (faa_terms(h).size() != expected[h - 1]) return fmt::format("h = {}", h);
    }
    return {};
  });

  checks.emplace_back("lambda_f1_prime_power_support", [&]() -> std::string {
    for (const auto& f : fs) {
      const auto l1 = lambda_fh(f, 1, n_max, exec);
      for (std::uint64_t n = 1; n <= n_max; ++n) {
        if (l1[n] != 0.0 && !is_prime_power(n)) return fmt::format("{}: n = {}", f.name(), n);
      }
    }
    return {};
  });

  checks.emplace_back("compensated_order_independence", [&]() -> std::string {
    for (const auto& f : fs) {
      std::vector<double> terms;
      enumerate_support(f, n_max, [&](std::uint64_t n, double v) {
        terms.push_back(v / static_cast<double>(n) * std::log(static_cast<double>(n)));
      });
      CompensatedSum fwd, rev;
      for (double t : terms) fwd.add(t);
      for (auto it = terms.rbegin(); it != terms.rend(); ++it) rev.add(*it);
      if (std::fabs(fwd.value() - rev.value()) > 1e-13 * std::max(1.0, std::fabs(fwd.value()))) {
        return f.name();
      }
    }
    return {};
  });

  checks.emplace_back("reph_identity", [&]() -> std::string {
    for (const auto& f : fs) {
      for (int k = 0; k <= 4; ++k) {
        const auto r = check_reph(f, std::log(1e4), k);
        if (r.relative() > 1e-10) return fmt::format("{} k = {}", f.name(), k);
      }
    }
    return {};
  });

  checks.emplace_back("G_j_monotone_non_negative", [&]() -> std::string {
    const auto grid = geometric_grid(static_cast<double>(n_max), {10.0, 16, 0.0});
    for (const auto& f : fs) {
      for (int j = 0; j <= 2; ++j) {
        const auto g = weighted_sum_grid(f, grid, j, Weight::log_X_over_n, exec);
        for (std::size_t i = 0; i < g.size(); ++i) {
          if (g[i] < 0.0 || (i > 0 && g[i] < g[i - 1])) return fmt::format("{} j = {}", f.name(), j);
        }
      }
    }
    return {};
  });

  checks.emplace_back("characteristic_roots_vieta", []() -> std::string {
    for (int h = 0; h <= 3; ++h) {
      for (double kappa : {0.3, 0.5, 1.0, 2.0}) {
        const auto rs = characteristic_roots(h, kappa);
        std::complex<double> sum = 0.0, prod = 1.0;
        double rising = 1.0;
        for (int i = 0; i <= h; ++i) rising *= kappa + i;
        for (const auto& z : rs.roots) {
          sum += z;
          prod *= z;
        }
        const double expected_prod = (h % 2 == 0 ? 1.0 : -1.0) * rising;  // (-1)^{h+1} (-K)
        // for h = 0 the constant term is also the trace term
        const double expected_sum = h == 0 ? kappa : h * (h + 1) / 2.0;
        if (std::abs(sum - expected_sum) > 1e-8 || std::abs(prod - expected_prod) > 1e-8) {
          return fmt::format("h = {} kappa = {}", h, kappa);
        }
      }
    }
    return {};
  });

  checks.emplace_back("fit_scale_equivariance", [&]() -> std::string {
    const auto grid = geometric_grid(static_cast<double>(n_max), {100.0, 24, 0.0});
    SumSeries s = measure_series(catalog::mu_sq(), SeriesKind::logn_pow, 2, grid, exec);
    const auto base = fit_expansion(s, 1.0, 1, 1.0);
    for (auto& v : s.sums) v *= 3.5;
    const auto scaled = fit_expansion(s, 1.0, 1, 1.0);
    if (std::fabs(scaled.C_hat - 3.5 * base.C_hat) > 1e-12 * std::fabs(3.5 * base.C_hat)) {
      return "C_hat";
    }
    for (std::size_t k = 0; k < base.a_hat.size(); ++k) {
      if (std::fabs(scaled.a_hat[k] - base.a_hat[k]) > 1e-12 * std::fabs(base.a_hat[k])) {
        return "a_hat";
      }
    }
    return {};
  });

  checks.emplace_back("euler_product_truncation", []() -> std::string {
    const auto f = catalog::mu_sq();
    const auto ref = euler_product(f, 1.0, 1'000'000);
    double prev = INFINITY;
    for (std::uint64_t P : {100, 1000, 10'000, 100'000, 1'000'000}) {
      const double v = euler_product(f, 1.0, P).value;
      if (!(v <= prev) || !(v >= ref.value - ref.tail_bound)) return fmt::format("P = {}", P);
      prev = v;
    }
    return {};
  });

  checks.emplace_back("thread_count_determinism", [&]() -> std::string {
    const Exec many{std::max(4, exec.threads)};
    for (const auto& f : fs) {
      if (!(sieve_values(f, n_max, {1}) == sieve_values(f, n_max, many))) return f.name();
      if (!(lambda_fh(f, 2, n_max, {1}) == lambda_fh(f, 2, n_max, many))) return f.name();
      const std::vector<double> grid{10.0, 1000.0, static_cast<double>(n_max)};
      if (log_power_sums_grid(f, grid, {0, 2}, {1}) != log_power_sums_grid(f, grid, {0, 2}, many)) {
        return f.name();
      }
    }
    return {};
  });

  std::vector<PropertyResult> results;
  for (auto& [name, check] : checks) {
    PropertyResult r{name, false, {}};
    try {
      r.detail = check();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace lf
