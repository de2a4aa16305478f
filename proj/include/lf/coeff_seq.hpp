#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lf/errors.hpp"

namespace lf {

// Dense arithmetic function on [1, n_max], indexed from 1.
class CoeffSeq {
 public:
  CoeffSeq() = default;
  explicit CoeffSeq(std::uint64_t n_max) : values_(n_max + 1, 0.0) {
    if (n_max < 1) throw DomainError("CoeffSeq needs n_max >= 1");
  }

  std::uint64_t n_max() const { return values_.empty() ? 0 : values_.size() - 1; }

  double operator[](std::uint64_t n) const { return values_[n]; }
  double& operator[](std::uint64_t n) { return values_[n]; }

  // Entries 1..n_max.
  std::span<const double> values() const { return std::span(values_).subspan(1); }
  std::span<double> values() { return std::span(values_).subspan(1); }

  // Unit of Dirichlet convolution: e[1] = 1, zero elsewhere.
  static CoeffSeq unit(std::uint64_t n_max) {
    CoeffSeq e(n_max);
    e[1] = 1.0;
    return e;
  }

  static CoeffSeq constant(std::uint64_t n_max, double c) {
    CoeffSeq s(n_max);
    for (auto& v : s.values()) v = c;
    return s;
  }

  friend bool operator==(const CoeffSeq&, const CoeffSeq&) = default;

 private:
  std::vector<double> values_;
};

}  // namespace lf
