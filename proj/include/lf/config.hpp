#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "lf/grid.hpp"
#include "lf/multiplicative.hpp"

namespace lf {

enum class HigherPowers { zero, constant, power };

// User-defined multiplicative function:
//   f(p)   = residue rule on p mod `modulus`, else `fp_default`
//   f(p^k) = override if present; otherwise by `higher` for k >= 2
//            (zero, f(p), or f(p)^k). Squarefree support forces zero.
struct FunctionDefinition {
  std::string name = "custom";
  double kappa = 0.0;
  int h = 0;
  Support support = Support::dense;
  std::uint64_t modulus = 1;
  std::map<std::uint64_t, double> fp_by_residue;
  double fp_default = 0.0;
  HigherPowers higher = HigherPowers::zero;
  std::map<std::pair<std::uint64_t, unsigned>, double> overrides;
};

MultiplicativeFunction make_function(const FunctionDefinition& def);

// Flat `key = value` file with a [function] block and an optional [run]
// block. `#` starts a comment. Recognized [function] keys: name, kappa, h,
// support (dense|squarefree), modulus, fp.<r>, fp.default,
// higher (zero|constant|power), override = "<p> <k> <value>" (repeatable).
struct ConfigFile {
  std::optional<FunctionDefinition> function;
  std::map<std::string, std::string> run;
};

// DomainError on malformed input.
ConfigFile parse_config(std::string_view text);
ConfigFile load_config(const std::string& path);

enum class OutputFormat { csv, json };

struct RunConfig {
  std::string function = "one";
  std::optional<FunctionDefinition> inline_function;
  std::optional<double> kappa;  // falls back to the function's claimed kappa
  int h = 0;
  double X_max = 1e7;
  GridSpec grid;
  std::string output;  // empty: stdout
  OutputFormat format = OutputFormat::csv;
  int threads = 1;
  std::optional<double> margin;
};

// X_max >= Q_min >= 2, points >= 8, threads >= 1; DomainError otherwise.
void validate(const RunConfig& config);

MultiplicativeFunction resolve_function(const RunConfig& config);

// Applies the [run] block of a config file (keys: function, kappa, h, X,
// Q_min, points, ratio, threads, margin, format, out).
void apply_run_block(const std::map<std::string, std::string>& run, RunConfig& config);

}  // namespace lf
