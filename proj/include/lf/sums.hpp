#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lf/exec.hpp"
#include "lf/multiplicative.hpp"

namespace lf {

// log_n:        sum_{n <= X} g(n) (log n)^k
// log_X_over_n: G_k(X) = sum_{n <= X} g(n) (log(X/n))^k
enum class Weight { log_n, log_X_over_n };

enum class SeriesKind { G_j, logn_pow, S_k, lambda_fh_over_n };

const char* to_string(SeriesKind kind);

// A weighted partial sum sampled on an increasing grid of X values.
struct SumSeries {
  std::string f_name;
  SeriesKind kind = SeriesKind::logn_pow;
  int order = 0;
  std::vector<double> grid;
  std::vector<double> sums;
};

// All streaming sums below split [1, X] into fixed segments, accumulate each
// segment with compensated summation and merge segments in ascending order,
// so results do not depend on exec.threads.

double weighted_sum(const MultiplicativeFunction& f, double X, int k, Weight weight,
                    Exec exec = {});

std::vector<double> weighted_sum_grid(const MultiplicativeFunction& f,
                                      const std::vector<double>& grid, int k, Weight weight,
                                      Exec exec = {});

// sum_{n <= X_i} g(n) (log n)^k for every k in `ks` (result[j][i] for ks[j]),
// in a single pass over [1, max X].
std::vector<std::vector<double>> log_power_sums_grid(const MultiplicativeFunction& f,
                                                     const std::vector<double>& grid,
                                                     const std::vector<int>& ks,
                                                     Exec exec = {});

// S_k(Q) = sum_{n <= Q} Lambda_f(n) (log n)^k / n.
double s_k_sum(const MultiplicativeFunction& f, double Q, int k, Exec exec = {});

// result[j][i] = S_{ks[j]}(grid[i]), one pass over the prime powers.
std::vector<std::vector<double>> s_k_grid(const MultiplicativeFunction& f,
                                          const std::vector<double>& grid,
                                          const std::vector<int>& ks, Exec exec = {});

// sum_{n <= X} Lambda_{f,h}(n) / n; needs the dense Lambda_{f,h}.
double lambda_fh_over_n_sum(const MultiplicativeFunction& f, int h, double X, Exec exec = {});

std::vector<double> lambda_fh_over_n_grid(const MultiplicativeFunction& f, int h,
                                          const std::vector<double>& grid, Exec exec = {});

SumSeries measure_series(const MultiplicativeFunction& f, SeriesKind kind, int order,
                         const std::vector<double>& grid, Exec exec = {});

// Measured constants of the hypothesis
//   S_0(Q) = kappa log Q + eta_0 + O*(A / log^h(2Q)).
struct HypothesisReport {
  std::string f_name;
  double kappa = 0.0;
  int h = 0;
  double eta0_hat = 0.0;
  double A_hat = 0.0;
  std::vector<double> eta_k_hat;  // k = 0..h, estimated at the largest Q
  double max_scaled_residual = 0.0;
  std::size_t grid_size = 0;

  std::vector<double> grid;
  std::vector<double> s0;
  std::vector<double> scaled_residual;  // |S_0 - kappa log Q - eta0_hat| log^h(2Q)
};

HypothesisReport check_hypothesis(const MultiplicativeFunction& f, double kappa, int h,
                                  const std::vector<double>& grid, Exec exec = {});

}  // namespace lf
