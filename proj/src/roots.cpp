#include "lf/roots.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "lf/errors.hpp"

namespace lf {
namespace {

using cd = std::complex<double>;

// Coefficients of R_h, lowest degree first.
std::vector<double> characteristic_poly(int h, double kappa) {
  std::vector<double> c{1.0};  // running product of (lambda - i)
  for (int i = 0; i <= h; ++i) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t d = 0; d < c.size(); ++d) {
      next[d + 1] += c[d];
      next[d] -= i * c[d];
    }
    c = std::move(next);
  }
  double rising = 1.0;
  for (int i = 0; i <= h; ++i) rising *= kappa + i;
  c[0] -= rising;
  return c;
}

cd horner(const std::vector<double>& c, cd z) {
  cd acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

cd horner_derivative(const std::vector<double>& c, cd z) {
  cd acc = 0.0;
  for (std::size_t d = c.size() - 1; d >= 1; --d) acc = acc * z + static_cast<double>(d) * c[d];
  return acc;
}

// Synthetic division of a monic polynomial by (z - root).
std::vector<double> deflate(const std::vector<double>& c, double root) {
  const std::size_t n = c.size() - 1;
  std::vector<double> q(n);
  double carry = c[n];
  for (std::size_t d = n; d-- > 0;) {
    q[d] = carry;
    carry = c[d] + carry * root;
  }
  return q;
}

std::vector<cd> durand_kerner(const std::vector<double>& c) {
  const std::size_t n = c.size() - 1;
  std::vector<cd> z(n);
  if (n == 0) return z;
  double bound = 1.0;
  for (std::size_t d = 0; d < n; ++d) bound = std::max(bound, 1.0 + std::fabs(c[d]));
  const cd seed(0.4, 0.9);
  cd w = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    w *= seed;
    z[i] = bound * w / std::abs(w) * (0.5 + 0.5 * static_cast<double>(i + 1) / n);
  }
  for (int sweep = 0; sweep < 500; ++sweep) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cd denom = 1.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      const cd step = horner(c, z[i]) / denom;
      z[i] -= step;
      worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[i])));
    }
    if (worst <= 1e-12) return z;
  }
  return z;  // caller validates the residual
}

bool ordered(const cd& a, const cd& b) {
  if (std::fabs(a.real() - b.real()) > 1e-9 * (1.0 + std::abs(a) + std::abs(b))) {
    return a.real() > b.real();
  }
  return a.imag() < b.imag();
}

}  // namespace

cd characteristic_value(cd lambda, int h, double kappa) {
  cd falling = 1.0;
  double rising = 1.0;
  for (int i = 0; i <= h; ++i) {
    falling *= lambda - static_cast<double>(i);
    rising *= kappa + i;
  }
  return falling - rising;
}

RootSet characteristic_roots(int h, double kappa) {
  if (h < 0) throw DomainError("characteristic_roots needs h >= 0");
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
    throw DomainError("characteristic_roots needs finite kappa >= 0");
  }
  const auto poly = characteristic_poly(h, kappa);
  const double known = kappa + h;
  auto rest = durand_kerner(deflate(poly, known));

  RootSet out{h, kappa, {cd(known, 0.0)}};
  for (cd z : rest) {
    for (int it = 0; it < 3; ++it) {
      const cd d = horner_derivative(poly, z);
      if (std::abs(d) == 0.0) break;
      const cd step = horner(poly, z) / d;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      z -= step;
    }
    if (std::fabs(z.imag()) <= 1e-12 * (1.0 + std::abs(z))) z = {z.real(), 0.0};
    const double tol = 1e-9 * std::pow(1.0 + std::abs(z), h + 1);
    if (!(std::abs(characteristic_value(z, h, kappa)) <= tol)) {
      throw NumericError(fmt::format(
          "characteristic_roots(h = {}, kappa = {}): root finder did not converge ({} + {}i)", h,
          kappa, z.real(), z.imag()));
    }
    out.roots.push_back(z);
  }
  std::sort(out.roots.begin(), out.roots.end(), ordered);
  return out;
}

std::vector<cd> integer_translates(const RootSet& set, double tol) {
  std::vector<cd> out;
  for (const cd& z : set.roots) {
    const double offset = z.real() - set.kappa;
    if (std::fabs(z.imag()) <= tol && std::fabs(offset - std::round(offset)) <= tol) {
      out.push_back(z);
    }
  }
  return out;
}

}  // namespace lf
