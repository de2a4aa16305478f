#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace lf {

enum class Support { dense, squarefree_sparse };

// Local factor oracle: (prime p, exponent k >= 1) -> f(p^k).
using LocalFactor = std::function<double(std::uint64_t p, unsigned k)>;

// A multiplicative function presented through its values on prime powers,
// together with the parameters (kappa, h) it is claimed to satisfy. f(1) = 1
// is implicit and the oracle is never asked for k = 0.
class MultiplicativeFunction {
 public:
  MultiplicativeFunction(std::string name, LocalFactor local, double kappa, int h,
                         Support support, bool allow_signed = false);

  const std::string& name() const { return name_; }
  double kappa_claimed() const { return kappa_; }
  int h_claimed() const { return h_; }
  Support support() const { return support_; }

  // Signed functions (e.g. the Moebius function) are accepted by the
  // identity checks only; the fitter and hypothesis checks reject them.
  bool allow_signed() const { return allow_signed_; }

  // f(p^k) without validation; k = 0 yields 1. Hot path of the sieves.
  double local(std::uint64_t p, unsigned k) const {
    if (k == 0) return 1.0;
    if (support_ == Support::squarefree_sparse && k >= 2) return 0.0;
    return local_(p, k);
  }

  // f(n) by trial-division factorization. Meant for tests and small n.
  double value(std::uint64_t n) const;

  // g(n) = f(n) / n.
  double value_over_n(std::uint64_t n) const { return value(n) / static_cast<double>(n); }

 private:
  std::string name_;
  LocalFactor local_;
  double kappa_;
  int h_;
  Support support_;
  bool allow_signed_;
};

// Checked f(p^k): DomainError for composite p, negative k, or an oracle value
// that is not finite or violates the sign/support contract.
double eval_local(const MultiplicativeFunction& f, std::uint64_t p, int k);

namespace catalog {

MultiplicativeFunction one();
MultiplicativeFunction delta_1();
MultiplicativeFunction mu_sq();
// Number of ordered K-tuples of divisors: f(p^k) = C(k + K - 1, K - 1).
MultiplicativeFunction tau(int K);
MultiplicativeFunction ind_1mod4();
// Squarefree support with f(p) = c.
MultiplicativeFunction sf_const(double c);
// Signed Moebius function, for stress-testing identities only.
MultiplicativeFunction moebius();

// one, delta_1, mu_sq, tau_2, tau_3, tau_4, ind_1mod4, sf_const(0.5).
std::vector<MultiplicativeFunction> standard();

// Resolves names such as "tau_3" or "sf_const(0.25)"; DomainError otherwise.
MultiplicativeFunction by_name(std::string_view name);

}  // namespace catalog

}  // namespace lf
