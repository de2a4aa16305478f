#pragma once

#include <span>
#include <vector>

#include "lf/exec.hpp"
#include "lf/sums.hpp"

namespace lf {

// Least-squares fit of values_i against the basis (log X_i)^{e_j}.
struct LogPowerFit {
  std::vector<double> exponents;
  std::vector<double> coeffs;
  std::vector<double> residuals;  // data - model
};

// Solved by column-pivoted Householder QR in extended precision after
// scaling each column to unit max-norm. DomainError if the design matrix is
// rank deficient or the sizes disagree.
LogPowerFit fit_log_powers(std::span<const double> grid, std::span<const double> values,
                           const std::vector<double>& exponents);

// Fitted form C (log X)^{kappa+h+1} (1 + a_1/log X + ... + a_h/log^h X)
// + b (log X)^kappa of a logn_pow series of order h + 1.
struct AsymptoticFit {
  double C_hat = 0.0;
  std::vector<double> a_hat;  // a_1..a_h
  double tail_coeff = 0.0;    // coefficient of (log X)^kappa
  double kappa = 0.0;
  int h = 0;
  std::vector<double> grid;
  std::vector<double> residuals;
  std::vector<double> scaled_residuals;  // |r_i| / envelope_i
  double envelope_exponent = 0.0;        // (h+2)(h+1)/2
  double margin = 0.0;
  double max_scaled_residual = 0.0;
  bool envelope_ok = false;
};

// (log X)^kappa (log log 3X)^{(h+2)(h+1)/2}.
double envelope(double X, double kappa, int h);

// Needs >= 2(h+2) grid points spanning at least two decades; DomainError
// otherwise. a_hat is reported as zero when C_hat vanishes.
AsymptoticFit fit_expansion(const SumSeries& series, double kappa, int h, double margin);

// 10 x the largest scaled residual of the fit for f = one (kappa = 1) on the
// same grid: the default envelope margin.
double reference_margin(int h, const std::vector<double>& grid, Exec exec = {});

// Mann-Kendall test for an increasing trend of values against their index.
struct TrendTest {
  double tau = 0.0;
  double z = 0.0;
  double p_increasing = 1.0;  // one-sided p-value
};

TrendTest kendall_trend(std::span<const double> values);

}  // namespace lf
