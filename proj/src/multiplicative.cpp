#include "lf/multiplicative.hpp"

#include <charconv>
#include <cmath>
#include <utility>

#include <fmt/format.h>

#include "lf/errors.hpp"
#include "lf/primes.hpp"

namespace lf {

MultiplicativeFunction::MultiplicativeFunction(std::string name, LocalFactor local,
                                               double kappa, int h, Support support,
                                               bool allow_signed)
    : name_(std::move(name)),
      local_(std::move(local)),
      kappa_(kappa),
      h_(h),
      support_(support),
      allow_signed_(allow_signed) {
  if (!local_) throw DomainError("multiplicative function '" + name_ + "' has no local factor");
  if (!(kappa_ >= 0.0) || !std::isfinite(kappa_)) {
    throw DomainError("kappa must be finite and non-negative");
  }
  if (h_ < 0) throw DomainError("h must be non-negative");
}

double MultiplicativeFunction::value(std::uint64_t n) const {
  if (n == 0) throw DomainError("f(0) is undefined");
  double out = 1.0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k > 0) out *= local(p, k);
  }
  if (n > 1) out *= local(n, 1);
  return out;
}

double eval_local(const MultiplicativeFunction& f, std::uint64_t p, int k) {
  if (k < 0) throw DomainError(fmt::format("negative exponent k = {}", k));
  if (!is_prime(p)) throw DomainError(fmt::format("{} is not prime", p));
  if (k == 0) return 1.0;
  const double v = f.local(p, static_cast<unsigned>(k));
  if (!std::isfinite(v)) {
    throw DomainError(fmt::format("{}: f({}^{}) is not finite", f.name(), p, k));
  }
  if (v < 0.0 && !f.allow_signed()) {
    throw DomainError(fmt::format("{}: f({}^{}) = {} is negative", f.name(), p, k, v));
  }
  return v;
}

namespace catalog {

MultiplicativeFunction one() {
  return {"one", [](std::uint64_t, unsigned) { return 1.0; }, 1.0, 2, Support::dense};
}

MultiplicativeFunction delta_1() {
  return {"delta_1", [](std::uint64_t, unsigned) { return 0.0; }, 0.0, 2, Support::dense};
}

MultiplicativeFunction mu_sq() {
  return {"mu_sq", [](std::uint64_t, unsigned) { return 1.0; }, 1.0, 2,
          Support::squarefree_sparse};
}

MultiplicativeFunction tau(int K) {
  if (K < 1) throw DomainError("tau_K needs K >= 1");
  // C(k + K - 1, K - 1) is exact in double for the exponents that occur.
  auto local = [K](std::uint64_t, unsigned k) {
    double c = 1.0;
    for (int i = 1; i < K; ++i) c = c * (k + i) / i;
    return std::round(c);
  };
  return {fmt::format("tau_{}", K), local, static_cast<double>(K), 2, Support::dense};
}

MultiplicativeFunction ind_1mod4() {
  return {"ind_1mod4", [](std::uint64_t p, unsigned) { return p % 4 == 1 ? 1.0 : 0.0; }, 0.5,
          2, Support::dense};
}

MultiplicativeFunction sf_const(double c) {
  if (!(c >= 0.0) || !std::isfinite(c)) throw DomainError("sf_const needs finite c >= 0");
  return {fmt::format("sf_const({:g})", c), [c](std::uint64_t, unsigned) { return c; }, c, 2,
          Support::squarefree_sparse};
}

MultiplicativeFunction moebius() {
  return {"moebius", [](std::uint64_t, unsigned) { return -1.0; }, 0.0, 0,
          Support::squarefree_sparse, true};
}

std::vector<MultiplicativeFunction> standard() {
  return {one(), delta_1(), mu_sq(), tau(2), tau(3), tau(4), ind_1mod4(), sf_const(0.5)};
}

MultiplicativeFunction by_name(std::string_view name) {
  if (name == "one") return one();
  if (name == "delta_1") return delta_1();
  if (name == "mu_sq") return mu_sq();
  if (name == "ind_1mod4") return ind_1mod4();
  if (name == "moebius") return moebius();
  if (name == "tau_2") return tau(2);
  if (name == "tau_3") return tau(3);
  if (name == "tau_4") return tau(4);
  constexpr std::string_view prefix = "sf_const(";
  if (name.starts_with(prefix) && name.ends_with(")")) {
    const auto arg = name.substr(prefix.size(), name.size() - prefix.size() - 1);
    double c = 0.0;
    const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), c);
    if (ec == std::errc() && ptr == arg.data() + arg.size()) return sf_const(c);
  }
  throw DomainError(fmt::format("unknown function '{}'", name));
}

}  // namespace catalog

}  // namespace lf
