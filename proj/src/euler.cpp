#include "lf/euler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "lf/errors.hpp"
#include "lf/kahan.hpp"
#include "lf/primes.hpp"

namespace lf {
namespace {

constexpr double kTermFloor = 1e-18;
constexpr unsigned kMaxLocalTerms = 4096;

// sum_{nu >= 1} f(p^nu) x^nu for x = 1/p or 1/p^2.
double local_tail(const MultiplicativeFunction& f, std::uint64_t p, double x) {
  CompensatedSum s;
  double xn = 1.0;
  for (unsigned nu = 1;; ++nu) {
    xn *= x;
    const double term = f.local(p, nu) * xn;
    s.add(term);
    if (std::fabs(term) < kTermFloor && xn < kTermFloor) break;
    if (nu >= kMaxLocalTerms || !std::isfinite(term)) {
      throw NumericError(
          fmt::format("{}: local sum at p = {} does not converge", f.name(), p));
    }
  }
  return s.value();
}

EulerProduct product_impl(const MultiplicativeFunction& f, double kappa, std::uint64_t P_max,
                          bool literal) {
  if (P_max < 100) throw DomainError("euler_product needs P_max >= 100");
  if (!(kappa >= 0.0)) throw DomainError("euler_product needs kappa >= 0");
  const double eps = std::numeric_limits<double>::epsilon();
  CompensatedSum total;
  double c_f = 0.0;
  const std::uint64_t decade = P_max / 10;
  for (std::uint64_t p : primes_up_to(P_max)) {
    const double pd = static_cast<double>(p);
    const double tail = local_tail(f, p, literal ? 1.0 / (pd * pd) : 1.0 / pd);
    if (!(1.0 + tail > 0.0)) {
      throw DomainError(fmt::format("{}: local factor at p = {} is not positive", f.name(), p));
    }
    const double a = kappa * std::log1p(-1.0 / pd);
    const double b = std::log1p(tail);
    double log_factor = a + b;
    // Below rounding resolution the factor is exactly 1.
    if (std::fabs(log_factor) <= 8.0 * eps * (std::fabs(a) + std::fabs(b))) log_factor = 0.0;
    total.add(log_factor);
    if (p > decade) c_f = std::max(c_f, std::fabs(log_factor) * pd * pd);
  }
  EulerProduct out;
  out.log_value = total.value();
  out.value = std::exp(out.log_value);
  out.tail_bound = std::expm1(c_f / static_cast<double>(P_max));
  out.P_max = P_max;
  return out;
}

}  // namespace

double gamma_eval(double x) {
  if (!(x > 0.0)) throw DomainError(fmt::format("gamma_eval needs x > 0, got {}", x));
  return std::tgamma(x);
}

EulerProduct euler_product(const MultiplicativeFunction& f, double kappa, std::uint64_t P_max) {
  return product_impl(f, kappa, P_max, false);
}

EulerProduct euler_product_literal(const MultiplicativeFunction& f, double kappa,
                                   std::uint64_t P_max) {
  return product_impl(f, kappa, P_max, true);
}

double theoretical_leading(const MultiplicativeFunction& f, double kappa, int h,
                           std::uint64_t P_max) {
  if (h < 0) throw DomainError("theoretical_leading needs h >= 0");
  if (kappa == 0.0) return 0.0;
  const double c = euler_product(f, kappa, P_max).value;
  return kappa * c / ((kappa + h + 1) * gamma_eval(kappa + 1.0));
}

}  // namespace lf
