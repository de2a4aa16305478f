#pragma once

#include <vector>

namespace lf {

// Geometric sampling grid Q_i = round(q_min r^i). With ratio = 0 the ratio
// is chosen so that `points` values span [q_min, q_max].
struct GridSpec {
  double q_min = 1e3;
  int points = 64;
  double ratio = 0.0;
};

// Strictly increasing integer-valued grid; duplicates after rounding are
// dropped and the last point is floor(q_max) when the ratio is derived.
// DomainError on q_min < 1, q_max < q_min, points < 1, or ratio in (0, 1].
std::vector<double> geometric_grid(double q_max, const GridSpec& spec = {});

// DomainError unless the grid is non-empty, strictly increasing and >= 1.
void validate_grid(const std::vector<double>& grid);

}  // namespace lf
