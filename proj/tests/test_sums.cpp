#include <doctest.h>

#include <cmath>

#include "lf/checks.hpp"
#include "lf/errors.hpp"
#include "lf/grid.hpp"
#include "lf/multiplicative.hpp"
#include "lf/reference.hpp"
#include "lf/sums.hpp"

using namespace lf;

TEST_CASE("small weighted sums") {
  CHECK(weighted_sum(catalog::mu_sq(), 4, 1, Weight::log_X_over_n) ==
        doctest::Approx(1.8287619755504569).epsilon(1e-14));
  CHECK(s_k_sum(catalog::one(), 3, 0) == doctest::Approx(0.71277768650267592).epsilon(1e-14));
  CHECK(s_k_sum(catalog::mu_sq(), 4, 0) == doctest::Approx(0.53949089136268957).epsilon(1e-14));
  CHECK(lambda_fh_over_n_sum(catalog::one(), 2, 4) ==
        doctest::Approx(1.0028825876686125).epsilon(1e-14));
  const double G[] = {2.4428571428571431, 3.7833489208125477, 7.2379817437965368,
                      14.969570271801688};
  for (int k = 0; k <= 3; ++k) {
    CHECK(weighted_sum(catalog::mu_sq(), 10, k, Weight::log_X_over_n) ==
          doctest::Approx(G[k]).epsilon(1e-14));
  }
  CHECK(weighted_sum(catalog::delta_1(), 1e5, 3, Weight::log_n) == 0.0);
  CHECK(weighted_sum(catalog::one(), 1, 0, Weight::log_n) == 1.0);
  CHECK_THROWS_AS(weighted_sum(catalog::one(), 0.5, 0, Weight::log_n), DomainError);
  CHECK_THROWS_AS(s_k_sum(catalog::one(), 10, -1), DomainError);
  CHECK_THROWS_AS(lambda_fh_over_n_sum(catalog::one(), 0, 10), DomainError);
}

TEST_CASE("weighted sums vs reference") {
  for (const auto& f : catalog::standard()) {
    for (int k = 0; k <= 3; ++k) {
      for (auto w : {Weight::log_n, Weight::log_X_over_n}) {
        const double fast = weighted_sum(f, 20000.5, k, w);
        const double ref = reference::weighted_sum(f, 20000.5, k, w);
        REQUIRE(fast == doctest::Approx(ref).epsilon(1e-12));
      }
    }
    REQUIRE(s_k_sum(f, 20000, 1) == doctest::Approx(reference::s_k_sum(f, 20000, 1)).epsilon(1e-12));
  }
}

TEST_CASE("grid sums agree with single sums") {
  const auto f = catalog::tau(2);
  const auto grid = geometric_grid(3e6, {1e3, 12, 0});
  const auto series = log_power_sums_grid(f, grid, {0, 2}, Exec{2});
  const auto sk = s_k_grid(f, grid, {0, 1}, Exec{2});
  const auto gj = weighted_sum_grid(f, grid, 1, Weight::log_X_over_n);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(series[0][i] == doctest::Approx(weighted_sum(f, grid[i], 0, Weight::log_n)).epsilon(1e-13));
    CHECK(series[1][i] == doctest::Approx(weighted_sum(f, grid[i], 2, Weight::log_n)).epsilon(1e-13));
    CHECK(sk[1][i] == doctest::Approx(s_k_sum(f, grid[i], 1)).epsilon(1e-13));
    CHECK(gj[i] == doctest::Approx(weighted_sum(f, grid[i], 1, Weight::log_X_over_n)).epsilon(1e-13));
  }
  const auto lf2 = lambda_fh_over_n_grid(catalog::mu_sq(), 2, {10.0, 100.0, 1000.0});
  CHECK(lf2[2] == doctest::Approx(lambda_fh_over_n_sum(catalog::mu_sq(), 2, 1000)).epsilon(1e-13));
}

TEST_CASE("sums are thread independent") {
  const auto f = catalog::mu_sq();
  const auto grid = geometric_grid(4.5e6, {1e3, 16, 0});
  const auto a = log_power_sums_grid(f, grid, {1, 2}, Exec{1});
  const auto b = log_power_sums_grid(f, grid, {1, 2}, Exec{8});
  CHECK(a == b);
  CHECK(weighted_sum(f, 4.5e6, 2, Weight::log_X_over_n, Exec{1}) ==
        weighted_sum(f, 4.5e6, 2, Weight::log_X_over_n, Exec{5}));
  CHECK(s_k_grid(f, grid, {0}, Exec{1}) == s_k_grid(f, grid, {0}, Exec{3}));
}

TEST_CASE("grid") {
  const auto g = geometric_grid(1e6, {1e3, 4, 0});
  CHECK(g == std::vector<double>{1000, 10000, 100000, 1000000});
  const auto r = geometric_grid(5000, {1000, 64, 2.0});
  CHECK(r == std::vector<double>{1000, 2000, 4000});
  CHECK(geometric_grid(123456.7).back() == 123456);
  CHECK_THROWS_AS(geometric_grid(10, {100, 8, 0}), DomainError);
  CHECK_THROWS_AS(geometric_grid(1e4, {100, 8, 0.5}), DomainError);
  CHECK_THROWS_AS(validate_grid({3, 2}), DomainError);
}

TEST_CASE("hypothesis") {
  const auto grid = geometric_grid(1e6, {1e3, 32, 0});
  const auto one = check_hypothesis(catalog::one(), 1.0, 1, grid);
  // S_0(Q) = log Q - gamma + o(1) for the classical von Mangoldt function
  CHECK(one.eta0_hat == doctest::Approx(-0.5772156649).epsilon(0.01));
  CHECK(one.eta_k_hat.size() == 2);
  CHECK(one.grid_size == grid.size());
  const auto d = check_hypothesis(catalog::delta_1(), 0.0, 1, grid);
  CHECK(d.eta0_hat == 0.0);
  CHECK(d.A_hat == 0.0);
  CHECK_THROWS_AS(check_hypothesis(catalog::moebius(), 1, 1, grid), DomainError);
  CHECK_THROWS_AS(check_hypothesis(catalog::one(), 1, 1, {10, 100}), DomainError);
  CHECK_THROWS_AS(check_hypothesis(catalog::one(), 1, 1, {}), DomainError);
}

TEST_CASE("giter identity") {
  for (const auto& f : {catalog::one(), catalog::mu_sq(), catalog::ind_1mod4()}) {
    for (int k = 1; k <= 3; ++k) {
      const auto c = check_giter(f, 1e4, k, 1e-8);
      CHECK(c.residual <= 1e-6 * (1 + std::fabs(c.lhs)));
    }
  }
  const auto d = check_giter(catalog::delta_1(), 100, 2, 1e-10);
  CHECK(d.lhs == doctest::Approx(std::pow(std::log(100.0), 2)));
  CHECK_THROWS_AS(check_giter(catalog::one(), 100, 0, 1e-8), DomainError);
}

TEST_CASE("reph identity") {
  const double u = std::log(1e4);
  for (const auto& f : catalog::standard()) {
    for (int k = 0; k <= 4; ++k) CHECK(check_reph(f, u, k).relative() <= 1e-10);
  }
  CHECK_THROWS_AS(check_reph(catalog::one(), -1, 1), DomainError);
}
