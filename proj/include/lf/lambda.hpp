#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lf/exec.hpp"
#include "lf/multiplicative.hpp"

namespace lf {

// Lambda_f(p^m) for m = 1..M, solving
//   m f(p^m) log p = sum_{j=1}^{m} Lambda_f(p^j) f(p^{m-j})
// for the new unknown at each step (its coefficient is f(1) = 1).
// DomainError if p is not prime or M < 1.
std::vector<double> lambda_prime_power(const MultiplicativeFunction& f, std::uint64_t p,
                                       unsigned M);

// Unchecked variant used by the streaming kernels.
std::vector<double> lambda_prime_power_unchecked(const MultiplicativeFunction& f,
                                                 std::uint64_t p, unsigned M);

struct LambdaEntry {
  std::uint64_t n;  // p^m
  std::uint64_t p;
  unsigned m;
  double value;
};

// Lambda_f on all prime powers up to n_max, sorted by n. Lambda_f vanishes
// off prime powers, so only those are stored.
class LambdaTable {
 public:
  LambdaTable(std::string f_name, std::uint64_t n_max, std::vector<LambdaEntry> entries);

  const std::string& f_name() const { return f_name_; }
  std::uint64_t n_max() const { return n_max_; }
  std::span<const LambdaEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // Lambda_f(n); zero when n is not a prime power. DomainError if n > n_max.
  double operator()(std::uint64_t n) const;

  // Lambda_f(p^m); DomainError if p^m is not tabulated.
  double at(std::uint64_t p, unsigned m) const;

 private:
  std::string f_name_;
  std::uint64_t n_max_;
  std::vector<LambdaEntry> entries_;
};

// Streams primes with the segmented sieve and tabulates Lambda_f(p^m) <= n_max.
LambdaTable lambda_table(const MultiplicativeFunction& f, std::uint64_t n_max, Exec exec = {});

// Calls `visit` for every prime power p^m <= n_max whose base prime lies in
// [lo, hi), in ascending (p, m) order. `base` holds the primes <= sqrt(hi - 1).
void for_each_lambda_in_segment(const MultiplicativeFunction& f, std::uint64_t n_max,
                                std::uint64_t lo, std::uint64_t hi,
                                const std::vector<std::uint64_t>& base,
                                const std::function<void(const LambdaEntry&)>& visit);

}  // namespace lf
