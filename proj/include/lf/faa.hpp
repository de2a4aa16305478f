#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lf {

// Exact rational with 64-bit parts, always reduced and with den > 0.
// Arithmetic throws NumericError on overflow.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }
  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// One term of the partition expansion of Lambda_{f,h}: multiplicities
// ks[i - 1] = k_i with sum i k_i = h, and its signed coefficient
//   (-1)^h h! (-1)^{sum k_i} / prod_i (k_i! (i!)^{k_i}).
struct PartitionTerm {
  std::vector<unsigned> ks;
  Rational coeff;

  unsigned order() const;  // sum i k_i
  unsigned parts() const;  // sum k_i
};

inline constexpr int kMaxFaaOrder = 12;

// All terms for order h (1 <= h <= 12), ordered lexicographically by
// (k_1, k_2, ...) with larger k_1 first.
std::vector<PartitionTerm> faa_terms(int h);

}  // namespace lf
