#include "lf/primes.hpp"

#include <algorithm>
#include <cmath>

#include "lf/exec.hpp"

namespace lf {
namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Plain sieve of Eratosthenes for the base primes (limit is at most ~2^32).
std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace

std::uint64_t isqrt(std::uint64_t n) {
  using u128 = unsigned __int128;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && u128{r} * r > n) --r;
  while (u128{r + 1} * (r + 1) <= n) ++r;
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are sufficient for n < 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_in_segment(std::uint64_t lo, std::uint64_t hi,
                                             const std::vector<std::uint64_t>& base) {
  std::vector<std::uint64_t> out;
  if (hi <= lo) return out;
  lo = std::max<std::uint64_t>(lo, 2);
  if (hi <= lo) return out;
  std::vector<char> composite(hi - lo, 0);
  for (std::uint64_t p : base) {
    if (p * p >= hi) break;
    std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
    for (std::uint64_t j = start; j < hi; j += p) composite[j - lo] = 1;
  }
  for (std::uint64_t i = 0; i < hi - lo; ++i) {
    if (!composite[i]) out.push_back(lo + i);
  }
  return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  if (limit < 2) return {};
  const auto base = small_primes(isqrt(limit));
  std::vector<std::uint64_t> out;
  for (std::uint64_t lo = 0; lo <= limit; lo += kSegmentSize) {
    const std::uint64_t hi = std::min(limit + 1, lo + kSegmentSize);
    auto seg = primes_in_segment(lo, hi, base);
    out.insert(out.end(), seg.begin(), seg.end());
  }
  return out;
}

}  // namespace lf
