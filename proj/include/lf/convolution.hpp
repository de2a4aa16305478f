#pragma once

#include <cstdint>

#include "lf/coeff_seq.hpp"
#include "lf/exec.hpp"
#include "lf/multiplicative.hpp"
#include "lf/values.hpp"

namespace lf {

// (a * b)(n) = sum_{d | n} a(d) b(n / d), by the divisor/multiple double loop.
// The operand with fewer non-zero entries drives the outer loop; each output
// entry accumulates its terms in ascending outer index regardless of the
// thread count. DomainError on mismatched lengths.
CoeffSeq dirichlet_convolve(const CoeffSeq& a, const CoeffSeq& b, Exec exec = {});

// out[n] = a[n] (log n)^j.
CoeffSeq log_weight(const CoeffSeq& a, int j);

// Dense Lambda_f on [1, N].
CoeffSeq lambda_sequence(const MultiplicativeFunction& f, std::uint64_t n_max, Exec exec = {},
                         std::uint64_t dense_limit = kDenseLimit);

// Lambda_{f,h} on [1, N]: the partition expansion over faa_terms(h) in which
// the (i-1)-th derivative of Z_F = -F'/F contributes the sequence
// (-1)^{i-1} (log n)^{i-1} Lambda_f(n). Satisfies f log^h = f * Lambda_{f,h}.
CoeffSeq lambda_fh(const MultiplicativeFunction& f, int h, std::uint64_t n_max, Exec exec = {},
                   std::uint64_t dense_limit = kDenseLimit);

}  // namespace lf
