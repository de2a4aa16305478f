#pragma once

#include <cstdint>

namespace lf {

// Number of OpenMP threads a kernel may use. Every kernel partitions its
// work into fixed blocks whose boundaries do not depend on `threads`, and
// merges block results in ascending order, so outputs are bitwise
// identical for any thread count.
struct Exec {
  int threads = 1;
};

// Fixed block length (in integers) used by all segmented kernels.
inline constexpr std::uint64_t kSegmentSize = std::uint64_t{1} << 20;

}  // namespace lf
