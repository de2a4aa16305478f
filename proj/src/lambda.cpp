#include "lf/lambda.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <fmt/format.h>

#include "lf/errors.hpp"
#include "lf/primes.hpp"

namespace lf {

std::vector<double> lambda_prime_power_unchecked(const MultiplicativeFunction& f,
                                                 std::uint64_t p, unsigned M) {
  const double log_p = std::log(static_cast<double>(p));
  std::vector<double> local(M + 1);
  for (unsigned k = 0; k <= M; ++k) local[k] = f.local(p, k);
  std::vector<double> lam(M + 1, 0.0);
  for (unsigned m = 1; m <= M; ++m) {
    double acc = m * local[m] * log_p;
    for (unsigned j = 1; j < m; ++j) acc -= lam[j] * local[m - j];
    lam[m] = acc;
  }
  return {lam.begin() + 1, lam.end()};
}

std::vector<double> lambda_prime_power(const MultiplicativeFunction& f, std::uint64_t p,
                                       unsigned M) {
  if (M < 1) throw DomainError("lambda_prime_power needs M >= 1");
  if (!is_prime(p)) throw DomainError(fmt::format("{} is not prime", p));
  return lambda_prime_power_unchecked(f, p, M);
}

LambdaTable::LambdaTable(std::string f_name, std::uint64_t n_max,
                         std::vector<LambdaEntry> entries)
    : f_name_(std::move(f_name)), n_max_(n_max), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const LambdaEntry& a, const LambdaEntry& b) { return a.n < b.n; });
}

double LambdaTable::operator()(std::uint64_t n) const {
  if (n > n_max_) throw DomainError(fmt::format("{} is beyond the table bound {}", n, n_max_));
  auto it = std::lower_bound(entries_.begin(), entries_.end(), n,
                             [](const LambdaEntry& e, std::uint64_t v) { return e.n < v; });
  return it != entries_.end() && it->n == n ? it->value : 0.0;
}

double LambdaTable::at(std::uint64_t p, unsigned m) const {
  std::uint64_t n = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (n > n_max_ / p) throw DomainError(fmt::format("{}^{} is beyond the table", p, m));
    n *= p;
  }
  auto it = std::lower_bound(entries_.begin(), entries_.end(), n,
                             [](const LambdaEntry& e, std::uint64_t v) { return e.n < v; });
  if (it == entries_.end() || it->n != n || it->p != p) {
    throw DomainError(fmt::format("{}^{} is not a tabulated prime power", p, m));
  }
  return it->value;
}

void for_each_lambda_in_segment(const MultiplicativeFunction& f, std::uint64_t n_max,
                                std::uint64_t lo, std::uint64_t hi,
                                const std::vector<std::uint64_t>& base,
                                const std::function<void(const LambdaEntry&)>& visit) {
  hi = std::min(hi, n_max + 1);
  for (std::uint64_t p : primes_in_segment(lo, hi, base)) {
    unsigned M = 1;
    for (std::uint64_t pk = p; pk <= n_max / p; pk *= p) ++M;
    const auto lam = lambda_prime_power_unchecked(f, p, M);
    std::uint64_t pk = p;
    for (unsigned m = 1; m <= M; ++m) {
      visit(LambdaEntry{pk, p, m, lam[m - 1]});
      if (m < M) pk *= p;
    }
  }
}

LambdaTable lambda_table(const MultiplicativeFunction& f, std::uint64_t n_max, Exec exec) {
  if (n_max < 2) throw DomainError("lambda_table needs N >= 2");
  const auto base = primes_up_to(isqrt(n_max));
  const auto blocks = static_cast<std::int64_t>(n_max / kSegmentSize + 1);
  std::vector<std::vector<LambdaEntry>> parts(blocks);
#pragma omp parallel for schedule(dynamic, 1) num_threads(exec.threads)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::uint64_t lo = static_cast<std::uint64_t>(b) * kSegmentSize;
    for_each_lambda_in_segment(f, n_max, lo, lo + kSegmentSize, base,
                               [&](const LambdaEntry& e) { parts[b].push_back(e); });
  }
  std::vector<LambdaEntry> entries;
  for (auto& part : parts) entries.insert(entries.end(), part.begin(), part.end());
  return {f.name(), n_max, std::move(entries)};
}

}  // namespace lf
