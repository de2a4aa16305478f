#include "lf/checks.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "lf/errors.hpp"
#include "lf/kahan.hpp"
#include "lf/values.hpp"

namespace lf {
namespace {

struct SupportPoint {
  double n;
  double g;  // f(n) / n
  double log_n;
};

std::vector<SupportPoint> sorted_support(const MultiplicativeFunction& f, double X) {
  std::vector<std::pair<std::uint64_t, double>> raw;
  enumerate_support(f, static_cast<std::uint64_t>(std::floor(X)),
                    [&](std::uint64_t n, double v) { raw.emplace_back(n, v); });
  std::sort(raw.begin(), raw.end());
  std::vector<SupportPoint> out;
  out.reserve(raw.size());
  for (auto [n, v] : raw) {
    const double nd = static_cast<double>(n);
    out.push_back({nd, v / nd, std::log(nd)});
  }
  return out;
}

double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return std::round(c);
}

// Adaptive Simpson on [a, b] with absolute tolerance tol.
template <class Fn>
double simpson(const Fn& fn, double a, double b, double fa, double fm, double fb, double whole,
               double tol, int depth, int& max_depth_seen) {
  max_depth_seen = std::max(max_depth_seen, depth);
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = fn(lm);
  const double frm = fn(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth >= 48) {
    throw NumericError(fmt::format(
        "adaptive Simpson did not converge on [{:.17g}, {:.17g}]: |delta| = {:.3e}, tol = {:.3e}",
        a, b, std::fabs(delta), tol));
  }
  return simpson(fn, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, max_depth_seen) +
         simpson(fn, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, max_depth_seen);
}

}  // namespace

IdentityCheck check_giter(const MultiplicativeFunction& f, double X, int k, double quad_tol) {
  if (!(X >= 1.0)) throw DomainError("check_giter needs X >= 1");
  if (k < 1) throw DomainError("check_giter needs k >= 1");
  if (!(quad_tol > 0.0)) throw DomainError("check_giter needs quad_tol > 0");

  const auto support = sorted_support(f, X);
  const double log_x = std::log(X);

  CompensatedSum lhs;
  for (const auto& s : support) lhs.add(s.g * std::pow(log_x - s.log_n, k));

  // On [s_j, s_{j+1}) G_{k-1}(t) = sum_r C(k-1, r) (log t)^r M_{k-1-r} with
  // moments M_q = sum_{i <= j} g_i (-log s_i)^q.
  const int deg = k - 1;
  std::vector<CompensatedSum> moments(deg + 1);
  std::vector<double> binom(deg + 1);
  for (int r = 0; r <= deg; ++r) binom[r] = binomial(deg, r);

  CompensatedSum integral;
  const double span = X - 1.0;
  for (std::size_t j = 0; j < support.size(); ++j) {
    double w = support[j].g;
    for (int q = 0; q <= deg; ++q) {
      moments[q].add(w);
      w *= -support[j].log_n;
    }
    const double a = support[j].n;
    const double b = j + 1 < support.size() ? support[j + 1].n : X;
    if (!(b > a)) continue;

    std::vector<double> m(deg + 1);
    for (int q = 0; q <= deg; ++q) m[q] = moments[q].value();
    auto integrand = [&](double t) {
      const double L = std::log(t);
      double acc = 0.0;
      double lp = 1.0;
      for (int r = 0; r <= deg; ++r) {
        acc += binom[r] * lp * m[deg - r];
        lp *= L;
      }
      return acc / t;
    };
    const double tol = quad_tol * (b - a) / span;
    const double fa = integrand(a);
    const double fm = integrand(0.5 * (a + b));
    const double fb = integrand(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    int depth = 0;
    try {
      integral.add(simpson(integrand, a, b, fa, fm, fb, whole, tol, 0, depth));
    } catch (const NumericError& e) {
      throw NumericError(fmt::format("check_giter({}, X = {}, k = {}): piece {} of {}: {}",
                                     f.name(), X, k, j + 1, support.size(), e.what()));
    }
  }

  IdentityCheck out;
  out.lhs = lhs.value();
  out.rhs = k * integral.value();
  out.residual = std::fabs(out.lhs - out.rhs);
  out.scale = 1.0 + std::fabs(out.lhs);
  return out;
}

IdentityCheck check_reph(const MultiplicativeFunction& f, double u, int k) {
  if (!(u > 0.0)) throw DomainError("check_reph needs u > 0");
  if (k < 0) throw DomainError("check_reph needs k >= 0");
  const auto support = sorted_support(f, std::exp(u));

  CompensatedSum lhs;
  std::vector<CompensatedSum> G(k + 1);
  for (const auto& s : support) {
    lhs.add(s.g * std::pow(s.log_n, k));
    const double d = u - s.log_n;
    double w = s.g;
    for (int m = 0; m <= k; ++m) {
      G[m].add(w);
      w *= d;
    }
  }

  IdentityCheck out;
  out.lhs = lhs.value();
  out.scale = std::fabs(out.lhs);
  CompensatedSum rhs;
  for (int j = 0; j <= k; ++j) {
    const double term = binomial(k, j) * std::pow(u, j) * G[k - j].value();
    out.scale = std::max(out.scale, std::fabs(term));
    rhs.add((k - j) % 2 == 0 ? term : -term);
  }
  out.rhs = rhs.value();
  out.residual = std::fabs(out.lhs - out.rhs);
  return out;
}

}  // namespace lf
