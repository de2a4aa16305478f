#include "lf/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include <fmt/format.h>

#include "lf/errors.hpp"
#include "lf/faa.hpp"
#include "lf/lambda.hpp"

namespace lf {
namespace {

std::vector<std::uint64_t> nonzero_indices(const CoeffSeq& a) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= a.n_max(); ++n) {
    if (a[n] != 0.0) out.push_back(n);
  }
  return out;
}

void check_dense(std::uint64_t n_max, std::uint64_t dense_limit, const char* what) {
  if (n_max > dense_limit) {
    throw CapacityError(fmt::format("{}: N = {} exceeds the dense limit {}", what, n_max,
                                    dense_limit));
  }
}

}  // namespace

CoeffSeq dirichlet_convolve(const CoeffSeq& a, const CoeffSeq& b, Exec exec) {
  if (a.n_max() != b.n_max()) {
    throw DomainError(fmt::format("dirichlet_convolve: lengths {} and {} differ", a.n_max(),
                                  b.n_max()));
  }
  const std::uint64_t n_max = a.n_max();
  auto outer_idx = nonzero_indices(a);
  auto inner_idx = nonzero_indices(b);
  const bool swap = inner_idx.size() < outer_idx.size();
  const CoeffSeq& outer = swap ? b : a;
  const CoeffSeq& inner = swap ? a : b;
  if (swap) outer_idx.swap(inner_idx);
  inner_idx = {};

  CoeffSeq out(n_max);
  const auto blocks = static_cast<std::int64_t>((n_max + kSegmentSize - 1) / kSegmentSize);
#pragma omp parallel for schedule(dynamic, 1) num_threads(exec.threads)
  for (std::int64_t blk = 0; blk < blocks; ++blk) {
    const std::uint64_t lo = 1 + static_cast<std::uint64_t>(blk) * kSegmentSize;
    const std::uint64_t hi = std::min(n_max + 1, lo + kSegmentSize);
    for (std::uint64_t d : outer_idx) {
      if (d >= hi) break;
      const double ad = outer[d];
      std::uint64_t q = (lo + d - 1) / d;
      for (std::uint64_t m = q * d; m < hi; m += d, ++q) out[m] += ad * inner[q];
    }
  }
  return out;
}

CoeffSeq log_weight(const CoeffSeq& a, int j) {
  if (j < 0) throw DomainError("log_weight needs j >= 0");
  if (j == 0) return a;
  CoeffSeq out(a.n_max());
  for (std::uint64_t n = 2; n <= a.n_max(); ++n) {
    out[n] = a[n] * std::pow(std::log(static_cast<double>(n)), j);
  }
  return out;
}

CoeffSeq lambda_sequence(const MultiplicativeFunction& f, std::uint64_t n_max, Exec exec,
                         std::uint64_t dense_limit) {
  check_dense(n_max, dense_limit, "lambda_sequence");
  CoeffSeq out(n_max);
  if (n_max < 2) return out;
  const auto table = lambda_table(f, n_max, exec);
  for (const auto& e : table.entries()) out[e.n] = e.value;
  return out;
}

CoeffSeq lambda_fh(const MultiplicativeFunction& f, int h, std::uint64_t n_max, Exec exec,
                   std::uint64_t dense_limit) {
  check_dense(n_max, dense_limit, "lambda_fh");
  if (h == 0) return CoeffSeq::unit(n_max);
  const auto terms = faa_terms(h);
  const CoeffSeq lam = lambda_sequence(f, n_max, exec, dense_limit);

  // derivative[j] holds the coefficients of the j-th derivative of Z_F.
  std::vector<CoeffSeq> derivative;
  for (int j = 0; j < h; ++j) {
    CoeffSeq d = log_weight(lam, j);
    if (j % 2 == 1) {
      for (auto& v : d.values()) v = -v;
    }
    derivative.push_back(std::move(d));
  }

  // Convolution powers of derivative[i - 1], keyed by (i, k).
  std::map<std::pair<unsigned, unsigned>, CoeffSeq> powers;
  auto power = [&](unsigned i, unsigned k) -> const CoeffSeq& {
    for (unsigned r = 1; r <= k; ++r) {
      const auto key = std::make_pair(i, r);
      if (powers.contains(key)) continue;
      powers.emplace(key, r == 1 ? derivative[i - 1]
                                 : dirichlet_convolve(powers.at({i, r - 1}),
                                                      derivative[i - 1], exec));
    }
    return powers.at({i, k});
  };

  CoeffSeq out(n_max);
  for (const auto& term : terms) {
    CoeffSeq product;
    bool first = true;
    for (unsigned i = 1; i <= term.ks.size(); ++i) {
      const unsigned k = term.ks[i - 1];
      if (k == 0) continue;
      const CoeffSeq& factor = power(i, k);
      product = first ? factor : dirichlet_convolve(product, factor, exec);
      first = false;
    }
    const double c = term.coeff.to_double();
    for (std::uint64_t n = 1; n <= n_max; ++n) out[n] += c * product[n];
  }
  return out;
}

}  // namespace lf
