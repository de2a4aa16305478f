#pragma once

#include <cstdint>
#include <vector>

namespace lf {

// Deterministic primality test, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// All primes <= limit, ascending, via a segmented sieve of Eratosthenes.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// Primes in [lo, hi) given the base primes up to sqrt(hi - 1).
std::vector<std::uint64_t> primes_in_segment(std::uint64_t lo, std::uint64_t hi,
                                             const std::vector<std::uint64_t>& base);

// floor(sqrt(n)) computed exactly.
std::uint64_t isqrt(std::uint64_t n);

}  // namespace lf
