#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lf/exec.hpp"

namespace lf {

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Runs the library's invariant suite on [1, n_max] for the standard catalog.
std::vector<PropertyResult> run_selfcheck(std::uint64_t n_max, Exec exec = {});

}  // namespace lf
