#include <doctest.h>

#include <cmath>

#include "lf/convolution.hpp"
#include "lf/errors.hpp"
#include "lf/faa.hpp"
#include "lf/lambda.hpp"
#include "lf/multiplicative.hpp"
#include "lf/values.hpp"

using namespace lf;

TEST_CASE("lambda of f = one is the von Mangoldt function") {
  const auto table = lambda_table(catalog::one(), 100);
  CHECK(table(1) == 0.0);
  CHECK(table(6) == 0.0);
  CHECK(table(8) == doctest::Approx(std::log(2.0)));
  CHECK(table(81) == doctest::Approx(std::log(3.0)));
  CHECK(table(97) == doctest::Approx(std::log(97.0)));
  CHECK(table.at(2, 6) == doctest::Approx(std::log(2.0)));
  CHECK(table.size() == 25 + 10);  // primes and proper prime powers up to 100
}

TEST_CASE("lambda of tau_3 on powers of 2") {
  const auto v = lambda_prime_power(catalog::tau(3), 2, 4);
  REQUIRE(v.size() == 4);
  for (double x : v) CHECK(x == doctest::Approx(2.0794415416798357).epsilon(1e-14));
}

TEST_CASE("lambda of squarefree functions alternates") {
  for (double c : {0.3, 1.0, 2.0}) {
    const auto f = catalog::sf_const(c);
    const auto v = lambda_prime_power(f, 5, 6);
    for (int m = 1; m <= 6; ++m) {
      const double expect = (m % 2 ? 1.0 : -1.0) * std::pow(c, m) * std::log(5.0);
      CHECK(v[m - 1] == doctest::Approx(expect).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(lambda_prime_power(catalog::one(), 6, 2), DomainError);
}

TEST_CASE("lambda table threads") {
  const std::uint64_t N = 2 * kSegmentSize + 11;
  const auto a = lambda_table(catalog::tau(2), N, Exec{1});
  const auto b = lambda_table(catalog::tau(2), N, Exec{3});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.entries()[i].n == b.entries()[i].n);
    CHECK(a.entries()[i].value == b.entries()[i].value);
  }
}

TEST_CASE("partition terms") {
  const std::size_t counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int h = 1; h <= kMaxFaaOrder; ++h) {
    const auto terms = faa_terms(h);
    CHECK(terms.size() == counts[h]);
    for (const auto& t : terms) CHECK(t.order() == static_cast<unsigned>(h));
  }
  // h = 2: k = (2) -> 1, k = (0,1) -> -1
  const auto t2 = faa_terms(2);
  CHECK(t2[0].ks == std::vector<unsigned>{2, 0});
  CHECK(t2[0].coeff == Rational(1));
  CHECK(t2[1].coeff == Rational(-1));
  CHECK_THROWS_AS(faa_terms(0), DomainError);
  CHECK_THROWS_AS(faa_terms(kMaxFaaOrder + 1), DomainError);
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK((Rational(2, 3) * Rational(3, 4)).str() == "1/2");
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS(Rational(INT64_MAX) * Rational(2), NumericError);
}

TEST_CASE("lambda_{1,h} oracle values") {
  const auto l2 = lambda_fh(catalog::one(), 2, 30);
  const double log2 = std::log(2.0);
  CHECK(l2[4] == doctest::Approx(3 * log2 * log2).epsilon(1e-13));
  CHECK(l2[6] == doctest::Approx(1.523000020837618).epsilon(1e-13));
  CHECK(l2[12] == doctest::Approx(1.523000020837618).epsilon(1e-13));
  CHECK(std::fabs(l2[30]) < 1e-12);
  const auto l3 = lambda_fh(catalog::one(), 3, 30);
  CHECK(l3[12] == doctest::Approx(7.2602640747644891).epsilon(1e-13));
  CHECK(l3[30] == doctest::Approx(7.3535219225219617).epsilon(1e-13));

  const auto l0 = lambda_fh(catalog::one(), 0, 10);
  CHECK(l0 == CoeffSeq::unit(10));
  const auto l1 = lambda_fh(catalog::tau(2), 1, 1000);
  const auto lam = lambda_sequence(catalog::tau(2), 1000);
  CHECK(l1 == lam);
}

TEST_CASE("defining identity f log^h = f * Lambda_{f,h}") {
  const std::uint64_t N = 5000;
  for (const auto& f : catalog::standard()) {
    const auto fv = sieve_values(f, N);
    for (int h = 1; h <= 4; ++h) {
      const auto rhs = dirichlet_convolve(fv, lambda_fh(f, h, N));
      for (std::uint64_t n = 2; n <= N; ++n) {
        const double lhs = fv[n] * std::pow(std::log(static_cast<double>(n)), h);
        REQUIRE(std::fabs(lhs - rhs[n]) <= 1e-9 * std::max(1.0, std::fabs(lhs)));
      }
    }
  }
}
