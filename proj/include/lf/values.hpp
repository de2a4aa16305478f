#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lf/coeff_seq.hpp"
#include "lf/exec.hpp"
#include "lf/multiplicative.hpp"
#include "lf/primes.hpp"

namespace lf {

// Largest n_max for which dense arrays are materialized (about 1 GiB of doubles).
inline constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 27;

// Segmented sieve producing f(n) on arbitrary blocks [lo, hi) of [1, n_max].
// Each block is independent, so blocks can be filled concurrently.
class ValueSieve {
 public:
  ValueSieve(const MultiplicativeFunction& f, std::uint64_t n_max);

  std::uint64_t n_max() const { return n_max_; }

  // out[i] = f(lo + i) for lo + i < hi; requires 1 <= lo < hi <= n_max + 1.
  void fill(std::uint64_t lo, std::uint64_t hi, std::span<double> out) const;

 private:
  const MultiplicativeFunction* f_;
  std::uint64_t n_max_;
  std::vector<std::uint64_t> base_;             // primes <= sqrt(n_max)
  std::vector<std::vector<double>> base_local_;  // f(p^k), k = 0.. while p^k <= n_max
};

// f(n) for all n <= n_max. CapacityError above `dense_limit`.
CoeffSeq sieve_values(const MultiplicativeFunction& f, std::uint64_t n_max, Exec exec = {},
                      std::uint64_t dense_limit = kDenseLimit);

// Visits every n <= n_max with f(n) != 0 exactly once, as products of prime
// powers taken in increasing-prime order (depth-first). Returns the visit count.
template <class Visitor>
std::uint64_t enumerate_support(const MultiplicativeFunction& f, std::uint64_t n_max,
                                Visitor&& visit);

namespace detail {

template <class Visitor>
struct SupportWalker {
  const MultiplicativeFunction& f;
  std::uint64_t n_max;
  const std::vector<std::uint64_t>& primes;
  const std::vector<double>& first_power;  // f(p) for each prime
  Visitor& visit;
  std::uint64_t count = 0;

  void walk(std::uint64_t n, double fn, std::size_t start) {
    const std::uint64_t room = n_max / n;
    for (std::size_t i = start; i < primes.size() && primes[i] <= room; ++i) {
      const std::uint64_t p = primes[i];
      if (p > room / p) {
        // p^2 exceeds the room: only first powers remain and they are leaves.
        for (std::size_t j = i; j < primes.size() && primes[j] <= room; ++j) {
          const double v = fn * first_power[j];
          if (v != 0.0) {
            visit(n * primes[j], v);
            ++count;
          }
        }
        return;
      }
      std::uint64_t pk = p;
      for (unsigned k = 1;; ++k) {
        const double v = k == 1 ? fn * first_power[i] : fn * f.local(p, k);
        if (v != 0.0) {
          visit(n * pk, v);
          ++count;
          walk(n * pk, v, i + 1);
        }
        if (pk > room / p) break;
        pk *= p;
      }
    }
  }
};

}  // namespace detail

template <class Visitor>
std::uint64_t enumerate_support(const MultiplicativeFunction& f, std::uint64_t n_max,
                                Visitor&& visit) {
  if (n_max < 1) throw DomainError("enumerate_support needs n_max >= 1");
  const auto primes = primes_up_to(n_max);
  std::vector<double> first_power(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) first_power[i] = f.local(primes[i], 1);
  visit(std::uint64_t{1}, 1.0);
  detail::SupportWalker<std::remove_reference_t<Visitor>> walker{f, n_max, primes, first_power,
                                                                 visit};
  walker.walk(1, 1.0, 0);
  return walker.count + 1;
}

}  // namespace lf
