#include "lf/sums.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "lf/convolution.hpp"
#include "lf/errors.hpp"
#include "lf/grid.hpp"
#include "lf/kahan.hpp"
#include "lf/lambda.hpp"
#include "lf/primes.hpp"
#include "lf/values.hpp"

namespace lf {
namespace {

using Accumulators = std::vector<CompensatedSum>;  // [interval * nk + j]

std::vector<std::uint64_t> floor_grid(const std::vector<double>& grid) {
  std::vector<std::uint64_t> out;
  out.reserve(grid.size());
  for (double x : grid) out.push_back(static_cast<std::uint64_t>(std::floor(x)));
  return out;
}

// Merges per-segment interval sums in segment order, then forms prefix sums:
// result[j][i] = sum over intervals <= i.
std::vector<std::vector<double>> merge_intervals(const std::vector<Accumulators>& parts,
                                                 std::size_t intervals, std::size_t nk) {
  Accumulators total(intervals * nk);
  for (const auto& part : parts) {
    for (std::size_t i = 0; i < total.size(); ++i) total[i].merge(part[i]);
  }
  std::vector<std::vector<double>> out(nk, std::vector<double>(intervals));
  for (std::size_t j = 0; j < nk; ++j) {
    CompensatedSum running;
    for (std::size_t i = 0; i < intervals; ++i) {
      running.merge(total[i * nk + j]);
      out[j][i] = running.value();
    }
  }
  return out;
}

void check_orders(const std::vector<int>& ks) {
  for (int k : ks) {
    if (k < 0) throw DomainError(fmt::format("order k = {} must be >= 0", k));
  }
}

// sum_{n <= X} g(n) (log(X/n))^k over [1, X].
double log_ratio_sum(const MultiplicativeFunction& f, double X, int k, Exec exec) {
  const auto top = static_cast<std::uint64_t>(std::floor(X));
  const ValueSieve sieve(f, top);
  const auto blocks = static_cast<std::int64_t>((top + kSegmentSize - 1) / kSegmentSize);
  std::vector<CompensatedSum> parts(blocks);
  const double log_x = std::log(X);
#pragma omp parallel for schedule(dynamic, 1) num_threads(exec.threads)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::uint64_t lo = 1 + static_cast<std::uint64_t>(b) * kSegmentSize;
    const std::uint64_t hi = std::min(top + 1, lo + kSegmentSize);
    std::vector<double> vals(hi - lo);
    sieve.fill(lo, hi, vals);
    for (std::uint64_t n = lo; n < hi; ++n) {
      const double v = vals[n - lo];
      if (v == 0.0) continue;
      const double nd = static_cast<double>(n);
      parts[b].add(v / nd * std::pow(log_x - std::log(nd), k));
    }
  }
  CompensatedSum total;
  for (const auto& p : parts) total.merge(p);
  return total.value();
}

}  // namespace

const char* to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::G_j: return "G_j";
    case SeriesKind::logn_pow: return "logn_pow";
    case SeriesKind::S_k: return "S_k";
    case SeriesKind::lambda_fh_over_n: return "lambda_fh_over_n";
  }
  return "?";
}

std::vector<std::vector<double>> log_power_sums_grid(const MultiplicativeFunction& f,
                                                     const std::vector<double>& grid,
                                                     const std::vector<int>& ks, Exec exec) {
  validate_grid(grid);
  check_orders(ks);
  const auto bounds = floor_grid(grid);
  const std::uint64_t top = bounds.back();
  const std::size_t nk = ks.size();
  const int kmax = ks.empty() ? 0 : *std::max_element(ks.begin(), ks.end());
  const ValueSieve sieve(f, top);
  const auto blocks = static_cast<std::int64_t>((top + kSegmentSize - 1) / kSegmentSize);
  std::vector<Accumulators> parts(blocks, Accumulators(grid.size() * nk));

#pragma omp parallel for schedule(dynamic, 1) num_threads(exec.threads)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::uint64_t lo = 1 + static_cast<std::uint64_t>(b) * kSegmentSize;
    const std::uint64_t hi = std::min(top + 1, lo + kSegmentSize);
    std::vector<double> vals(hi - lo);
    sieve.fill(lo, hi, vals);
    std::vector<double> pw(kmax + 1);
    std::size_t interval =
        std::lower_bound(bounds.begin(), bounds.end(), lo) - bounds.begin();
    auto& acc = parts[b];
    for (std::uint64_t n = lo; n < hi; ++n) {
      while (bounds[interval] < n) ++interval;
      const double v = vals[n - lo];
      if (v == 0.0) continue;
      const double nd = static_cast<double>(n);
      const double L = std::log(nd);
      pw[0] = v / nd;
      for (int k = 1; k <= kmax; ++k) pw[k] = pw[k - 1] * L;
      for (std::size_t j = 0; j < nk; ++j) acc[interval * nk + j].add(pw[ks[j]]);
    }
  }
  return merge_intervals(parts, grid.size(), nk);
}

double weighted_sum(const MultiplicativeFunction& f, double X, int k, Weight weight,
                    Exec exec) {
  if (!(X >= 1.0)) throw DomainError(fmt::format("weighted_sum needs X >= 1, got {}", X));
  if (k < 0) throw DomainError("weighted_sum needs k >= 0");
  if (weight == Weight::log_n) return log_power_sums_grid(f, {X}, {k}, exec)[0][0];
  return log_ratio_sum(f, X, k, exec);
}

std::vector<double> weighted_sum_grid(const MultiplicativeFunction& f,
                                      const std::vector<double>& grid, int k, Weight weight,
                                      Exec exec) {
  validate_grid(grid);
  if (weight == Weight::log_n) return log_power_sums_grid(f, grid, {k}, exec)[0];
  std::vector<double> out;
  for (double x : grid) out.push_back(weighted_sum(f, x, k, weight, exec));
  return out;
}

std::vector<std::vector<double>> s_k_grid(const MultiplicativeFunction& f,
                                          const std::vector<double>& grid,
                                          const std::vector<int>& ks, Exec exec) {
  validate_grid(grid);
  check_orders(ks);
  const auto bounds = floor_grid(grid);
  const std::uint64_t top = bounds.back();
  const std::size_t nk = ks.size();
  if (top < 2) return std::vector<std::vector<double>>(nk, std::vector<double>(grid.size()));
  const int kmax = ks.empty() ? 0 : *std::max_element(ks.begin(), ks.end());
  const auto base = primes_up_to(isqrt(top));
  const auto blocks = static_cast<std::int64_t>(top / kSegmentSize + 1);
  std::vector<Accumulators> parts(blocks, Accumulators(grid.size() * nk));

#pragma omp parallel for schedule(dynamic, 1) num_threads(exec.threads)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::uint64_t lo = static_cast<std::uint64_t>(b) * kSegmentSize;
    auto& acc = parts[b];
    std::vector<double> pw(kmax + 1);
    for_each_lambda_in_segment(f, top, lo, lo + kSegmentSize, base, [&](const LambdaEntry& e) {
      if (e.value == 0.0) return;
      const std::size_t interval =
          std::lower_bound(bounds.begin(), bounds.end(), e.n) - bounds.begin();
      const double nd = static_cast<double>(e.n);
      const double L = std::log(nd);
      pw[0] = e.value / nd;
      for (int k = 1; k <= kmax; ++k) pw[k] = pw[k - 1] * L;
      for (std::size_t j = 0; j < nk; ++j) acc[interval * nk + j].add(pw[ks[j]]);
    });
  }
  return merge_intervals(parts, grid.size(), nk);
}

double s_k_sum(const MultiplicativeFunction& f, double Q, int k, Exec exec) {
  if (!(Q >= 1.0)) throw DomainError(fmt::format("s_k_sum needs Q >= 1, got {}", Q));
  if (k < 0) throw DomainError("s_k_sum needs k >= 0");
  return s_k_grid(f, {Q}, {k}, exec)[0][0];
}

std::vector<double> lambda_fh_over_n_grid(const MultiplicativeFunction& f, int h,
                                          const std::vector<double>& grid, Exec exec) {
  validate_grid(grid);
  if (h < 1) throw DomainError("lambda_fh_over_n needs h >= 1");
  const auto bounds = floor_grid(grid);
  const std::uint64_t top = std::max<std::uint64_t>(bounds.back(), 1);
  if (top > kDenseLimit) {
    throw CapacityError(fmt::format("lambda_fh_over_n: X = {} exceeds the dense limit {}", top,
                                    kDenseLimit));
  }
  const CoeffSeq seq = lambda_fh(f, h, top, exec);
  std::vector<double> out;
  CompensatedSum running;
  std::uint64_t n = 1;
  for (std::uint64_t bound : bounds) {
    for (; n <= bound; ++n) running.add(seq[n] / static_cast<double>(n));
    out.push_back(running.value());
  }
  return out;
}

double lambda_fh_over_n_sum(const MultiplicativeFunction& f, int h, double X, Exec exec) {
  if (!(X >= 1.0)) throw DomainError("lambda_fh_over_n_sum needs X >= 1");
  return lambda_fh_over_n_grid(f, h, {X}, exec)[0];
}

SumSeries measure_series(const MultiplicativeFunction& f, SeriesKind kind, int order,
                         const std::vector<double>& grid, Exec exec) {
  SumSeries s{f.name(), kind, order, grid, {}};
  switch (kind) {
    case SeriesKind::G_j: s.sums = weighted_sum_grid(f, grid, order, Weight::log_X_over_n, exec); break;
    case SeriesKind::logn_pow: s.sums = weighted_sum_grid(f, grid, order, Weight::log_n, exec); break;
    case SeriesKind::S_k: s.sums = s_k_grid(f, grid, {order}, exec)[0]; break;
    case SeriesKind::lambda_fh_over_n: s.sums = lambda_fh_over_n_grid(f, order, grid, exec); break;
  }
  return s;
}

HypothesisReport check_hypothesis(const MultiplicativeFunction& f, double kappa, int h,
                                  const std::vector<double>& grid, Exec exec) {
  if (grid.empty()) throw DomainError("check_hypothesis: empty grid");
  validate_grid(grid);
  if (grid.back() < 1e3) throw DomainError("check_hypothesis: grid must reach Q >= 1000");
  if (h < 0) throw DomainError("check_hypothesis: h must be >= 0");
  if (f.allow_signed()) throw DomainError("check_hypothesis: signed functions are not accepted");

  std::vector<int> ks(h + 1);
  for (int k = 0; k <= h; ++k) ks[k] = k;
  const auto s = s_k_grid(f, grid, ks, exec);

  HypothesisReport r;
  r.f_name = f.name();
  r.kappa = kappa;
  r.h = h;
  r.grid = grid;
  r.grid_size = grid.size();
  r.s0 = s[0];
  const double q_max = grid.back();
  const double log_q_max = std::log(q_max);
  r.eta0_hat = s[0].back() - kappa * log_q_max;
  for (int k = 0; k <= h; ++k) {
    r.eta_k_hat.push_back(s[k].back() - kappa / (k + 1) * std::pow(log_q_max, k + 1));
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double resid = r.s0[i] - kappa * std::log(grid[i]) - r.eta0_hat;
    const double scaled = std::fabs(resid) * std::pow(std::log(2.0 * grid[i]), h);
    r.scaled_residual.push_back(scaled);
    r.max_scaled_residual = std::max(r.max_scaled_residual, scaled);
  }
  r.A_hat = r.max_scaled_residual;
  return r;
}

}  // namespace lf
