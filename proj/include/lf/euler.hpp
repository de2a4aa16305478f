#pragma once

#include <cstdint>

#include "lf/multiplicative.hpp"

namespace lf {

// Gamma(x) for x > 0; DomainError otherwise.
double gamma_eval(double x);

struct EulerProduct {
  double value = 1.0;
  double log_value = 0.0;
  // Heuristic bound on |prod_{p > P_max} factor - 1|: expm1(c_f / P_max),
  // with c_f = max p^2 |log factor_p| over the last decade of primes.
  double tail_bound = 0.0;
  std::uint64_t P_max = 0;
};

// prod_{p <= P_max} (1 - 1/p)^kappa sum_{nu >= 0} f(p^nu) / p^nu, accumulated
// in log space. Local sums are truncated once terms drop below 1e-18.
// NumericError for a divergent local sum, DomainError for a non-positive
// local factor or P_max < 100.
EulerProduct euler_product(const MultiplicativeFunction& f, double kappa, std::uint64_t P_max);

// Same product with the local sum read literally as sum_nu g(p^nu) / p^nu,
// g(n) = f(n)/n. Reported next to the normalized constant for comparison.
EulerProduct euler_product_literal(const MultiplicativeFunction& f, double kappa,
                                   std::uint64_t P_max);

// Leading coefficient of sum_{n <= X} f(n)/n (log n)^{h+1}:
//   kappa C' / ((kappa + h + 1) Gamma(kappa + 1)),  C' = euler_product(...).value.
// Zero when kappa = 0.
double theoretical_leading(const MultiplicativeFunction& f, double kappa, int h,
                           std::uint64_t P_max);

}  // namespace lf
