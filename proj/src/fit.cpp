#include "lf/fit.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "lf/errors.hpp"
#include "lf/grid.hpp"
#include "lf/multiplicative.hpp"

namespace lf {

LogPowerFit fit_log_powers(std::span<const double> grid, std::span<const double> values,
                           const std::vector<double>& exponents) {
  using Matrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
  const auto rows = static_cast<Eigen::Index>(grid.size());
  const auto cols = static_cast<Eigen::Index>(exponents.size());
  if (values.size() != grid.size()) throw DomainError("fit: grid and values differ in length");
  if (cols == 0 || rows < cols) {
    throw DomainError(fmt::format("fit: {} points cannot determine {} coefficients", rows, cols));
  }

  Matrix A(rows, cols);
  Vector y(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (!(grid[i] > 1.0)) throw DomainError("fit: grid values must exceed 1");
    const long double L = std::log(static_cast<long double>(grid[i]));
    for (Eigen::Index j = 0; j < cols; ++j) A(i, j) = std::pow(L, static_cast<long double>(exponents[j]));
    y(i) = values[i];
  }
  Vector scale(cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    scale(j) = A.col(j).cwiseAbs().maxCoeff();
    if (scale(j) == 0) throw DomainError("fit: zero basis column");
    A.col(j) /= scale(j);
  }
  Eigen::ColPivHouseholderQR<Matrix> qr(A);
  qr.setThreshold(1e-13L);
  if (qr.rank() < cols) {
    throw DomainError(fmt::format("fit: design matrix is rank deficient (rank {} < {})",
                                  qr.rank(), cols));
  }
  const Vector x = qr.solve(y);
  const Vector model = A * x;

  LogPowerFit out;
  out.exponents = exponents;
  for (Eigen::Index j = 0; j < cols; ++j) out.coeffs.push_back(static_cast<double>(x(j) / scale(j)));
  for (Eigen::Index i = 0; i < rows; ++i) out.residuals.push_back(static_cast<double>(y(i) - model(i)));
  return out;
}

double envelope(double X, double kappa, int h) {
  const double e = (h + 2) * (h + 1) / 2.0;
  return std::pow(std::log(X), kappa) * std::pow(std::log(std::log(3.0 * X)), e);
}

AsymptoticFit fit_expansion(const SumSeries& series, double kappa, int h, double margin) {
  if (h < 0) throw DomainError("fit_expansion needs h >= 0");
  if (!(kappa >= 0.0)) throw DomainError("fit_expansion needs kappa >= 0");
  validate_grid(series.grid);
  if (series.sums.size() != series.grid.size()) throw DomainError("fit: series length mismatch");
  const auto need = static_cast<std::size_t>(2 * (h + 2));
  if (series.grid.size() < need) {
    throw DomainError(fmt::format("fit_expansion needs >= {} grid points, got {}", need,
                                  series.grid.size()));
  }
  if (series.grid.back() < 100.0 * series.grid.front()) {
    throw DomainError("fit_expansion needs a grid spanning at least two decades");
  }

  std::vector<double> exponents;
  for (int j = 0; j <= h + 1; ++j) exponents.push_back(kappa + h + 1 - j);
  const auto ls = fit_log_powers(series.grid, series.sums, exponents);

  AsymptoticFit fit;
  fit.kappa = kappa;
  fit.h = h;
  fit.C_hat = ls.coeffs[0];
  for (int k = 1; k <= h; ++k) fit.a_hat.push_back(fit.C_hat != 0.0 ? ls.coeffs[k] / fit.C_hat : 0.0);
  fit.tail_coeff = ls.coeffs.back();
  fit.grid = series.grid;
  fit.residuals = ls.residuals;
  fit.envelope_exponent = (h + 2) * (h + 1) / 2.0;
  fit.margin = margin;
  fit.envelope_ok = true;
  for (std::size_t i = 0; i < fit.grid.size(); ++i) {
    const double env = envelope(fit.grid[i], kappa, h);
    const double scaled = std::fabs(fit.residuals[i]) / env;
    fit.scaled_residuals.push_back(scaled);
    fit.max_scaled_residual = std::max(fit.max_scaled_residual, scaled);
    if (!(std::fabs(fit.residuals[i]) <= margin * env)) fit.envelope_ok = false;
  }
  return fit;
}

double reference_margin(int h, const std::vector<double>& grid, Exec exec) {
  const auto series = measure_series(catalog::one(), SeriesKind::logn_pow, h + 1, grid, exec);
  return 10.0 * fit_expansion(series, 1.0, h, 0.0).max_scaled_residual;
}

TrendTest kendall_trend(std::span<const double> values) {
  const auto n = static_cast<double>(values.size());
  TrendTest t;
  if (values.size() < 3) return t;
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      s += (values[j] > values[i]) - (values[j] < values[i]);
    }
  }
  t.tau = s / (0.5 * n * (n - 1.0));
  const double var = n * (n - 1.0) * (2.0 * n + 5.0) / 18.0;
  const double corrected = s > 0 ? s - 1.0 : s < 0 ? s + 1.0 : 0.0;
  t.z = corrected / std::sqrt(var);
  t.p_increasing = 0.5 * std::erfc(t.z / std::sqrt(2.0));
  return t;
}

}  // namespace lf
