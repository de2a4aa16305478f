#include "lf/values.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "lf/errors.hpp"

namespace lf {

ValueSieve::ValueSieve(const MultiplicativeFunction& f, std::uint64_t n_max)
    : f_(&f), n_max_(n_max), base_(primes_up_to(isqrt(n_max))) {
  if (n_max < 1) throw DomainError("ValueSieve needs n_max >= 1");
  base_local_.reserve(base_.size());
  for (std::uint64_t p : base_) {
    std::vector<double> powers{1.0};
    std::uint64_t pk = p;
    for (unsigned k = 1;; ++k) {
      powers.push_back(f.local(p, k));
      if (pk > n_max / p) break;
      pk *= p;
    }
    base_local_.push_back(std::move(powers));
  }
}

void ValueSieve::fill(std::uint64_t lo, std::uint64_t hi, std::span<double> out) const {
  if (lo < 1 || hi <= lo || hi > n_max_ + 1 || out.size() < hi - lo) {
    throw DomainError(fmt::format("ValueSieve::fill: bad block [{}, {})", lo, hi));
  }
  const std::uint64_t len = hi - lo;
  std::vector<std::uint64_t> rest(len);
  for (std::uint64_t i = 0; i < len; ++i) {
    out[i] = 1.0;
    rest[i] = lo + i;
  }
  for (std::size_t idx = 0; idx < base_.size(); ++idx) {
    const std::uint64_t p = base_[idx];
    if (p >= hi) break;
    const auto& powers = base_local_[idx];
    for (std::uint64_t m = (lo + p - 1) / p * p; m < hi; m += p) {
      const std::uint64_t i = m - lo;
      if (out[i] == 0.0) continue;
      unsigned k = 0;
      std::uint64_t r = rest[i];
      do {
        r /= p;
        ++k;
      } while (r % p == 0);
      rest[i] = r;
      out[i] *= powers[k];
    }
  }
  // What remains is 1 or a single prime above sqrt(n_max).
  for (std::uint64_t i = 0; i < len; ++i) {
    if (rest[i] > 1 && out[i] != 0.0) out[i] *= f_->local(rest[i], 1);
  }
}

CoeffSeq sieve_values(const MultiplicativeFunction& f, std::uint64_t n_max, Exec exec,
                      std::uint64_t dense_limit) {
  if (n_max < 1) throw DomainError("sieve_values needs N >= 1");
  if (n_max > dense_limit) {
    throw CapacityError(fmt::format(
        "sieve_values: N = {} exceeds the dense limit {}; use enumerate_support", n_max,
        dense_limit));
  }
  CoeffSeq seq(n_max);
  const ValueSieve sieve(f, n_max);
  const auto blocks = static_cast<std::int64_t>((n_max + kSegmentSize - 1) / kSegmentSize);
  auto values = seq.values();
#pragma omp parallel for schedule(dynamic, 1) num_threads(exec.threads)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::uint64_t lo = 1 + static_cast<std::uint64_t>(b) * kSegmentSize;
    const std::uint64_t hi = std::min(n_max + 1, lo + kSegmentSize);
    sieve.fill(lo, hi, values.subspan(lo - 1, hi - lo));
  }
  return seq;
}

}  // namespace lf
