#pragma once

#include <cstdint>

#include "lf/coeff_seq.hpp"
#include "lf/multiplicative.hpp"
#include "lf/sums.hpp"

// Straightforward single-threaded versions of the parallel kernels. They use
// different algorithms (smallest-prime-factor table, support enumeration,
// plain double loops) and serve as test oracles and benchmark baselines.
namespace lf::reference {

CoeffSeq sieve_values(const MultiplicativeFunction& f, std::uint64_t n_max);

CoeffSeq dirichlet_convolve(const CoeffSeq& a, const CoeffSeq& b);

// Sums over enumerate_support, accumulated in ascending n.
double weighted_sum(const MultiplicativeFunction& f, double X, int k, Weight weight);

double s_k_sum(const MultiplicativeFunction& f, double Q, int k);

}  // namespace lf::reference
