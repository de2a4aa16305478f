#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lf/exec.hpp"
#include "lf/fit.hpp"
#include "lf/grid.hpp"
#include "lf/multiplicative.hpp"
#include "lf/sums.hpp"

namespace lf {

struct VerifyOptions {
  double X_max = 1e7;
  GridSpec grid;
  std::optional<double> margin;  // default: reference_margin(h, grid)
  std::uint64_t P_max = 1'000'000;
  double lifeagain_X_max = 1e7;  // cap for the dense Lambda_{f,h} sums
};

struct VerifyReport {
  std::string function;
  double kappa = 0.0;
  int h = 0;
  double X_max = 0.0;
  double eta0_hat = 0.0;
  double A_hat = 0.0;
  double C_hat = 0.0;
  double C_theoretical = 0.0;
  double rel_gap = 0.0;  // C_hat / C_theoretical - 1, or C_hat when C_theoretical = 0
  std::vector<double> a_hat;
  bool envelope_ok = false;
  std::vector<std::complex<double>> roots;
  double lifeagain_gap = 0.0;

  double C_literal = 0.0;  // constant with the local sum read as sum g(p^nu)/p^nu
  double margin = 0.0;
  std::string margin_source;
  double max_scaled_residual = 0.0;
  double lifeagain_coeff = 0.0;
  double lifeagain_expected = 0.0;
  double lifeagain_X = 0.0;
  std::vector<std::string> failures;  // stages that failed, with messages
};

// Hypothesis constants, fit of sum f(n)/n (log n)^{h+1}, the theoretical
// leading coefficient, characteristic roots and the leading coefficient of
// sum Lambda_{f,h}(n)/n. A failing stage is recorded in `failures` and the
// remaining stages still run. Signed functions are rejected (DomainError).
VerifyReport verify_theorem(const MultiplicativeFunction& f, double kappa, int h,
                            const VerifyOptions& options, Exec exec = {});

// kappa (kappa+1) ... (kappa+k-1) / k!.
double rising_over_factorial(double kappa, int k);

}  // namespace lf
