#include "lf/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include <fmt/format.h>

#include "lf/errors.hpp"
#include "lf/euler.hpp"
#include "lf/roots.hpp"

namespace lf {

double rising_over_factorial(double kappa, int k) {
  double out = 1.0;
  for (int i = 0; i < k; ++i) out *= (kappa + i) / (i + 1);
  return out;
}

namespace {

template <class Fn>
void stage(VerifyReport& report, const char* name, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    report.failures.push_back(fmt::format("{}: {}", name, e.what()));
  }
}

}  // namespace

VerifyReport verify_theorem(const MultiplicativeFunction& f, double kappa, int h,
                            const VerifyOptions& options, Exec exec) {
  if (f.allow_signed()) throw DomainError("verify: signed functions are not accepted");
  if (h < 0) throw DomainError("verify: h must be >= 0");
  if (!(kappa >= 0.0)) throw DomainError("verify: kappa must be >= 0");
  const auto grid = geometric_grid(options.X_max, options.grid);

  VerifyReport r;
  r.function = f.name();
  r.kappa = kappa;
  r.h = h;
  r.X_max = options.X_max;

  stage(r, "hypothesis", [&] {
    const auto hyp = check_hypothesis(f, kappa, h, grid, exec);
    r.eta0_hat = hyp.eta0_hat;
    r.A_hat = hyp.A_hat;
  });

  stage(r, "fit", [&] {
    if (options.margin) {
      r.margin = *options.margin;
      r.margin_source = "user";
    } else {
      r.margin = reference_margin(h, grid, exec);
      r.margin_source = "10x reference fit of f = one";
    }
    const auto series = measure_series(f, SeriesKind::logn_pow, h + 1, grid, exec);
    const auto fit = fit_expansion(series, kappa, h, r.margin);
    r.C_hat = fit.C_hat;
    r.a_hat = fit.a_hat;
    r.envelope_ok = fit.envelope_ok;
    r.max_scaled_residual = fit.max_scaled_residual;
  });

  stage(r, "constant", [&] {
    r.C_theoretical = theoretical_leading(f, kappa, h, options.P_max);
    r.C_literal = kappa == 0.0 ? 0.0
                               : euler_product_literal(f, kappa, options.P_max).value /
                                     gamma_eval(kappa + 1.0);
  });
  r.rel_gap = r.C_theoretical != 0.0 ? r.C_hat / r.C_theoretical - 1.0 : r.C_hat;

  stage(r, "roots", [&] { r.roots = characteristic_roots(h, kappa).roots; });

  r.lifeagain_expected = rising_over_factorial(kappa, h);
  stage(r, "lifeagain", [&] {
    if (h == 0) {
      // Lambda_{f,0} is the convolution unit: the sum is identically 1.
      r.lifeagain_coeff = 1.0;
      r.lifeagain_X = options.X_max;
      return;
    }
    r.lifeagain_X = std::min(options.X_max, options.lifeagain_X_max);
    GridSpec spec = options.grid;
    spec.q_min = std::min(spec.q_min, r.lifeagain_X / 100.0);
    const auto life_grid = geometric_grid(r.lifeagain_X, spec);
    const auto sums = lambda_fh_over_n_grid(f, h, life_grid, exec);
    std::vector<double> exponents;
    for (int j = h; j >= 0; --j) exponents.push_back(j);
    r.lifeagain_coeff = fit_log_powers(life_grid, sums, exponents).coeffs[0];
  });
  r.lifeagain_gap = r.lifeagain_expected != 0.0
                        ? r.lifeagain_coeff / r.lifeagain_expected - 1.0
                        : r.lifeagain_coeff;
  return r;
}

}  // namespace lf
