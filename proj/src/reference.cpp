#include "lf/reference.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "lf/errors.hpp"
#include "lf/kahan.hpp"
#include "lf/lambda.hpp"
#include "lf/values.hpp"

namespace lf::reference {

CoeffSeq sieve_values(const MultiplicativeFunction& f, std::uint64_t n_max) {
  std::vector<std::uint32_t> spf(n_max + 1, 0);
  for (std::uint64_t i = 2; i <= n_max; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= n_max; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
  }
  CoeffSeq out(n_max);
  out[1] = 1.0;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const std::uint64_t p = spf[n];
    std::uint64_t m = n;
    unsigned k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    out[n] = f.local(p, k) * out[m];
  }
  return out;
}

CoeffSeq dirichlet_convolve(const CoeffSeq& a, const CoeffSeq& b) {
  if (a.n_max() != b.n_max()) throw DomainError("dirichlet_convolve: lengths differ");
  const std::uint64_t n_max = a.n_max();
  CoeffSeq out(n_max);
  for (std::uint64_t d = 1; d <= n_max; ++d) {
    for (std::uint64_t q = 1; d * q <= n_max; ++q) out[d * q] += a[d] * b[q];
  }
  return out;
}

double weighted_sum(const MultiplicativeFunction& f, double X, int k, Weight weight) {
  if (!(X >= 1.0)) throw DomainError("weighted_sum needs X >= 1");
  std::vector<std::pair<std::uint64_t, double>> support;
  enumerate_support(f, static_cast<std::uint64_t>(std::floor(X)),
                    [&](std::uint64_t n, double v) { support.emplace_back(n, v); });
  std::sort(support.begin(), support.end());
  CompensatedSum s;
  for (auto [n, v] : support) {
    const double nd = static_cast<double>(n);
    const double L = weight == Weight::log_n ? std::log(nd) : std::log(X / nd);
    s.add(v / nd * std::pow(L, k));
  }
  return s.value();
}

double s_k_sum(const MultiplicativeFunction& f, double Q, int k) {
  const auto top = static_cast<std::uint64_t>(std::floor(Q));
  if (top < 2) return 0.0;
  const auto table = lambda_table(f, top);
  CompensatedSum s;
  for (const auto& e : table.entries()) {
    const double nd = static_cast<double>(e.n);
    s.add(e.value / nd * std::pow(std::log(nd), k));
  }
  return s.value();
}

}  // namespace lf::reference
