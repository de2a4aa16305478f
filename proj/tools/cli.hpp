#pragma once

#include <ostream>

namespace lf::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 2;
inline constexpr int kNumericError = 3;
inline constexpr int kCapacityError = 4;
inline constexpr int kUsage = 64;

// Subcommands: lambda, sums, hypothesis, constant, roots, fit, verify, selfcheck.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lf::cli
