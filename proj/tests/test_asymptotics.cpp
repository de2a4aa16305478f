#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lf/errors.hpp"
#include "lf/euler.hpp"
#include "lf/fit.hpp"
#include "lf/grid.hpp"
#include "lf/multiplicative.hpp"
#include "lf/roots.hpp"
#include "lf/sums.hpp"
#include "lf/verify.hpp"

using namespace lf;

namespace {
const double kSixOverPiSq = 0.60792710185402665;

bool near(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
  return std::abs(a - b) <= tol;
}
}  // namespace

TEST_CASE("gamma") {
  CHECK(gamma_eval(1) == doctest::Approx(1).epsilon(1e-14));
  CHECK(gamma_eval(5) == doctest::Approx(24).epsilon(1e-14));
  CHECK(gamma_eval(0.5) == doctest::Approx(1.7724538509055161).epsilon(1e-13));
  CHECK_THROWS_AS(gamma_eval(0), DomainError);
}

TEST_CASE("euler product") {
  const auto one = euler_product(catalog::one(), 1.0, 1000);
  CHECK(one.value == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(one.tail_bound == 0.0);
  CHECK(euler_product(catalog::tau(2), 2.0, 1000).value == doctest::Approx(1.0).epsilon(1e-13));
  const auto mu2 = euler_product(catalog::mu_sq(), 1.0, 1'000'000);
  CHECK(std::fabs(mu2.value - kSixOverPiSq) <= mu2.tail_bound * kSixOverPiSq);
  CHECK(mu2.value > kSixOverPiSq);
  CHECK(theoretical_leading(catalog::mu_sq(), 1.0, 0, 1'000'000) ==
        doctest::Approx(0.30396355092701333).epsilon(1e-6));
  CHECK(theoretical_leading(catalog::one(), 1.0, 0, 1000) == doctest::Approx(0.5));
  CHECK(theoretical_leading(catalog::delta_1(), 0.0, 3, 1000) == 0.0);
  CHECK_THROWS_AS(euler_product(catalog::one(), 1.0, 50), DomainError);
  MultiplicativeFunction neg("neg", [](std::uint64_t, unsigned) { return -3.0; }, 1.0, 0,
                             Support::squarefree_sparse, true);
  CHECK_THROWS_AS(euler_product(neg, 1.0, 1000), DomainError);
}

TEST_CASE("characteristic roots") {
  using C = std::complex<double>;
  auto r = characteristic_roots(1, 1.0).roots;
  REQUIRE(r.size() == 2);
  CHECK(near(r[0], 2.0));
  CHECK(near(r[1], -1.0));

  r = characteristic_roots(0, 0.7).roots;
  REQUIRE(r.size() == 1);
  CHECK(near(r[0], 0.7));

  r = characteristic_roots(2, 1.0).roots;
  REQUIRE(r.size() == 3);
  CHECK(near(r[0], 3.0));
  CHECK(near(r[1], C(0, -std::sqrt(2.0))));
  CHECK(near(r[2], C(0, std::sqrt(2.0))));

  r = characteristic_roots(3, 0.5).roots;
  REQUIRE(r.size() == 4);
  CHECK(near(r[0], 3.5));
  CHECK(near(r[1], C(1.5, -1.224744871391589)));
  CHECK(near(r[2], C(1.5, 1.224744871391589)));
  CHECK(near(r[3], -0.5));

  r = characteristic_roots(3, 2.0).roots;
  CHECK(near(r[0], 5.0));
  CHECK(near(r[1], C(1.5, -3.122498999199199)));
  CHECK(near(r[3], -2.0));

  for (int h = 0; h <= 6; ++h) {
    for (double kappa : {0.0, 0.3, 1.0, 2.5}) {
      for (const auto& z : characteristic_roots(h, kappa).roots) {
        CHECK(std::abs(characteristic_value(z, h, kappa)) < 1e-8 * std::pow(1 + std::abs(z), h + 1));
      }
    }
  }
  CHECK_THROWS_AS(characteristic_roots(-1, 1.0), DomainError);
  CHECK_THROWS_AS(characteristic_roots(1, -0.5), DomainError);
}

TEST_CASE("integer translates of kappa") {
  // -kappa is a root for every odd h; it is a translate of kappa when 2 kappa is an integer
  for (int h = 1; h <= 3; ++h) {
    for (double kappa : {0.3, 0.5, 1.0, 2.0}) {
      const auto set = characteristic_roots(h, kappa);
      const auto tr = integer_translates(set);
      const bool extra = (h % 2 == 1) && std::fabs(2 * kappa - std::round(2 * kappa)) < 1e-12;
      REQUIRE(tr.size() == (extra ? 2u : 1u));
      CHECK(near(tr[0], kappa + h));
      if (extra) CHECK(near(tr[1], -kappa));
    }
  }
}

TEST_CASE("fit recovers an exact model") {
  const auto grid = geometric_grid(1e8, {1e3, 32, 0});
  SumSeries s;
  s.kind = SeriesKind::logn_pow;
  s.order = 1;
  s.grid = grid;
  for (double X : grid) s.sums.push_back(2 * std::pow(std::log(X), 2));
  const auto fit = fit_expansion(s, 1.0, 0, 1.0);
  CHECK(fit.C_hat == doctest::Approx(2.0).epsilon(1e-10));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(std::fabs(fit.residuals[i]) <= 1e-9 * s.sums[i]);
  }
  CHECK(fit.envelope_ok);
  CHECK(fit.envelope_exponent == 1.0);

  SumSeries h2 = s;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double L = std::log(grid[i]);
    h2.sums[i] = 0.5 * std::pow(L, 4) * (1 + 0.3 / L - 2.0 / (L * L)) + 7 * L;
  }
  const auto fit2 = fit_expansion(h2, 1.0, 2, 1.0);
  CHECK(fit2.C_hat == doctest::Approx(0.5).epsilon(1e-9));
  REQUIRE(fit2.a_hat.size() == 2);
  CHECK(fit2.a_hat[0] == doctest::Approx(0.3).epsilon(1e-7));
  CHECK(fit2.a_hat[1] == doctest::Approx(-2.0).epsilon(1e-7));
  CHECK(fit2.tail_coeff == doctest::Approx(7.0).epsilon(1e-6));
  CHECK(fit2.envelope_exponent == 6.0);
}

TEST_CASE("fit rejects degenerate grids") {
  SumSeries s;
  s.grid = {1000, 2000, 3000, 4000};
  s.sums = {1, 2, 3, 4};
  CHECK_THROWS_AS(fit_expansion(s, 1.0, 0, 1.0), DomainError);
  s.grid = geometric_grid(2e4, {1e3, 16, 0});
  s.sums.assign(s.grid.size(), 1.0);
  CHECK_THROWS_AS(fit_expansion(s, 1.0, 0, 1.0), DomainError);
  const std::vector<double> same(6, 1000.0);
  CHECK_THROWS_AS(fit_log_powers(same, std::vector<double>(6, 1.0), {1.0, 2.0}), DomainError);
}

TEST_CASE("fit of delta_1 vanishes") {
  const auto grid = geometric_grid(1e5, {1e3, 16, 0});
  const auto s = measure_series(catalog::delta_1(), SeriesKind::logn_pow, 2, grid);
  const auto fit = fit_expansion(s, 0.0, 1, 1.0);
  CHECK(std::fabs(fit.C_hat) <= 1e-9);
  CHECK(fit.a_hat == std::vector<double>{0.0});
}

TEST_CASE("kendall trend") {
  std::vector<double> up, flat;
  for (int i = 0; i < 40; ++i) {
    up.push_back(i + 0.1 * std::sin(i));
    flat.push_back(std::sin(1.7 * i));
  }
  CHECK(kendall_trend(up).p_increasing < 1e-6);
  CHECK(kendall_trend(up).tau == doctest::Approx(1.0));
  CHECK(kendall_trend(flat).p_increasing > 0.05);
}

TEST_CASE("verify report") {
  VerifyOptions opt;
  opt.X_max = 1e5;
  opt.grid = {1e3, 16, 0};
  const auto r = verify_theorem(catalog::delta_1(), 0.0, 1, opt);
  CHECK(r.failures.empty());
  CHECK(r.C_hat == 0.0);
  CHECK(r.rel_gap == 0.0);
  CHECK(r.envelope_ok);
  CHECK(rising_over_factorial(1.0, 2) == 1.0);
  CHECK(rising_over_factorial(2.0, 2) == 3.0);
  CHECK(rising_over_factorial(0.5, 0) == 1.0);

  opt.X_max = 1e6;
  const auto t = verify_theorem(catalog::tau(2), 2.0, 0, opt);
  CHECK(t.failures.empty());
  CHECK(std::fabs(t.rel_gap) < 0.05);
  CHECK(t.lifeagain_gap == 0.0);
  CHECK_THROWS_AS(verify_theorem(catalog::moebius(), 1.0, 1, opt), DomainError);
}
