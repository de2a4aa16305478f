#include "lf/grid.hpp"

#include <cmath>

#include <fmt/format.h>

#include "lf/errors.hpp"

namespace lf {

std::vector<double> geometric_grid(double q_max, const GridSpec& spec) {
  if (!(spec.q_min >= 1.0)) throw DomainError("grid: Q_min must be >= 1");
  if (!(q_max >= spec.q_min)) {
    throw DomainError(fmt::format("grid: X_max = {} is below Q_min = {}", q_max, spec.q_min));
  }
  if (spec.points < 1) throw DomainError("grid: needs at least one point");
  if (spec.ratio != 0.0 && !(spec.ratio > 1.0)) throw DomainError("grid: ratio must exceed 1");

  const double top = std::floor(q_max);
  const bool derived = spec.ratio == 0.0;
  const double ratio = !derived      ? spec.ratio
                       : spec.points > 1 ? std::pow(q_max / spec.q_min, 1.0 / (spec.points - 1))
                                         : 1.0;
  std::vector<double> grid;
  for (int i = 0; i < spec.points; ++i) {
    double q = std::round(spec.q_min * std::pow(ratio, i));
    if (derived && i == spec.points - 1) q = top;
    if (q > top) break;
    if (!grid.empty() && q <= grid.back()) continue;
    grid.push_back(q);
  }
  if (grid.empty()) grid.push_back(top);
  return grid;
}

void validate_grid(const std::vector<double>& grid) {
  if (grid.empty()) throw DomainError("empty grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 1.0) || !std::isfinite(grid[i])) {
      throw DomainError(fmt::format("grid value {} is not >= 1", grid[i]));
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) throw DomainError("grid is not strictly increasing");
  }
}

}  // namespace lf
