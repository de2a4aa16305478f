#include "lf/faa.hpp"

#include <numeric>

#include <fmt/format.h>

#include "lf/errors.hpp"

namespace lf {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw NumericError("rational overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw NumericError("rational overflow");
  return out;
}

std::int64_t factorial(unsigned n) {
  std::int64_t out = 1;
  for (unsigned i = 2; i <= n; ++i) out = checked_mul(out, i);
  return out;
}

void build(unsigned h, unsigned i, unsigned rest, std::vector<unsigned>& ks,
           std::vector<PartitionTerm>& out) {
  if (i > h) {
    if (rest == 0) out.push_back({ks, Rational()});
    return;
  }
  for (int k = static_cast<int>(rest / i); k >= 0; --k) {
    ks[i - 1] = static_cast<unsigned>(k);
    build(h, i + 1, rest - static_cast<unsigned>(k) * i, ks, out);
  }
  ks[i - 1] = 0;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string Rational::str() const {
  return den_ == 1 ? fmt::format("{}", num_) : fmt::format("{}/{}", num_, den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  const std::int64_t g1 = std::gcd(a.num_, b.den_);
  const std::int64_t g2 = std::gcd(b.num_, a.den_);
  return {checked_mul(a.num_ / (g1 ? g1 : 1), b.num_ / (g2 ? g2 : 1)),
          checked_mul(a.den_ / (g2 ? g2 : 1), b.den_ / (g1 ? g1 : 1))};
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw DomainError("rational division by zero");
  return a * Rational(b.den_, b.num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  const std::int64_t l = std::lcm(a.den_, b.den_);
  return {checked_add(checked_mul(a.num_, l / a.den_), checked_mul(b.num_, l / b.den_)), l};
}

unsigned PartitionTerm::order() const {
  unsigned s = 0;
  for (std::size_t i = 0; i < ks.size(); ++i) s += static_cast<unsigned>(i + 1) * ks[i];
  return s;
}

unsigned PartitionTerm::parts() const { return std::accumulate(ks.begin(), ks.end(), 0u); }

std::vector<PartitionTerm> faa_terms(int h) {
  if (h < 1 || h > kMaxFaaOrder) {
    throw DomainError(fmt::format("faa_terms: h = {} outside [1, {}]", h, kMaxFaaOrder));
  }
  const auto order = static_cast<unsigned>(h);
  std::vector<PartitionTerm> terms;
  std::vector<unsigned> ks(order, 0);
  build(order, 1, order, ks, terms);
  for (auto& t : terms) {
    std::int64_t den = 1;
    for (unsigned i = 1; i <= order; ++i) {
      const unsigned k = t.ks[i - 1];
      den = checked_mul(den, factorial(k));
      for (unsigned r = 0; r < k; ++r) den = checked_mul(den, factorial(i));
    }
    const bool negative = (order + t.parts()) % 2 == 1;
    t.coeff = Rational(negative ? -factorial(order) : factorial(order), den);
  }
  return terms;
}

}  // namespace lf
