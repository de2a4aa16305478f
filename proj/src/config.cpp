#include "lf/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "lf/errors.hpp"

namespace lf {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(std::string_view text, std::string_view key) {
  text = trim(text);
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw DomainError(fmt::format("config: '{}' is not a valid value for {}", text, key));
  }
  return value;
}

double parse_value(std::string_view text, std::string_view key) {
  const double v = parse_number<double>(text, key);
  if (!std::isfinite(v) || v < 0.0) {
    throw DomainError(fmt::format("config: {} must be finite and >= 0", key));
  }
  return v;
}

void set_function_key(FunctionDefinition& def, std::string_view key, std::string_view value,
                      int line) {
  if (key == "name") {
    def.name = std::string(value);
  } else if (key == "kappa") {
    def.kappa = parse_value(value, key);
  } else if (key == "h") {
    def.h = parse_number<int>(value, key);
  } else if (key == "support") {
    if (value == "dense") {
      def.support = Support::dense;
    } else if (value == "squarefree") {
      def.support = Support::squarefree_sparse;
    } else {
      throw DomainError(fmt::format("config line {}: support must be dense|squarefree", line));
    }
  } else if (key == "modulus") {
    def.modulus = parse_number<std::uint64_t>(value, key);
    if (def.modulus < 1) throw DomainError("config: modulus must be >= 1");
  } else if (key == "fp.default") {
    def.fp_default = parse_value(value, key);
  } else if (key.starts_with("fp.")) {
    def.fp_by_residue[parse_number<std::uint64_t>(key.substr(3), key)] = parse_value(value, key);
  } else if (key == "higher") {
    if (value == "zero") {
      def.higher = HigherPowers::zero;
    } else if (value == "constant") {
      def.higher = HigherPowers::constant;
    } else if (value == "power") {
      def.higher = HigherPowers::power;
    } else {
      throw DomainError(fmt::format("config line {}: higher must be zero|constant|power", line));
    }
  } else if (key == "override") {
    std::istringstream in{std::string(value)};
    std::string p, k, v;
    if (!(in >> p >> k >> v)) {
      throw DomainError(fmt::format("config line {}: override needs '<p> <k> <value>'", line));
    }
    def.overrides[{parse_number<std::uint64_t>(p, "override p"),
                   parse_number<unsigned>(k, "override k")}] = parse_value(v, "override value");
  } else {
    throw DomainError(fmt::format("config line {}: unknown [function] key '{}'", line, key));
  }
}

}  // namespace

MultiplicativeFunction make_function(const FunctionDefinition& def) {
  for (const auto& [residue, _] : def.fp_by_residue) {
    if (residue >= def.modulus) {
      throw DomainError(fmt::format("config: residue {} is not below modulus {}", residue,
                                    def.modulus));
    }
  }
  for (const auto& [pk, value] : def.overrides) {
    if (pk.second < 1) throw DomainError("config: override exponent must be >= 1");
    if (def.support == Support::squarefree_sparse && pk.second >= 2 && value != 0.0) {
      throw DomainError("config: squarefree support forbids non-zero f(p^k), k >= 2");
    }
  }
  auto local = [def](std::uint64_t p, unsigned k) {
    if (auto it = def.overrides.find({p, k}); it != def.overrides.end()) return it->second;
    double fp = def.fp_default;
    if (auto it = def.overrides.find({p, 1u}); it != def.overrides.end()) {
      fp = it->second;
    } else if (auto r = def.fp_by_residue.find(p % def.modulus); r != def.fp_by_residue.end()) {
      fp = r->second;
    }
    if (k == 1) return fp;
    switch (def.higher) {
      case HigherPowers::zero: return 0.0;
      case HigherPowers::constant: return fp;
      case HigherPowers::power: return std::pow(fp, static_cast<double>(k));
    }
    return 0.0;
  };
  return {def.name, local, def.kappa, def.h, def.support};
}

ConfigFile parse_config(std::string_view text) {
  ConfigFile out;
  std::string section;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw DomainError(fmt::format("config line {}: bad section", line_no));
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section == "function") {
        if (out.function) throw DomainError("config: only one [function] block is allowed");
        out.function.emplace();
      } else if (section != "run") {
        throw DomainError(fmt::format("config line {}: unknown section [{}]", line_no, section));
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw DomainError(fmt::format("config line {}: expected key = value", line_no));
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (section == "function") {
      set_function_key(*out.function, key, value, line_no);
    } else if (section == "run") {
      out.run[std::string(key)] = std::string(value);
    } else {
      throw DomainError(fmt::format("config line {}: key outside of a section", line_no));
    }
  }
  return out;
}

ConfigFile load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError(fmt::format("cannot read config file '{}'", path));
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void validate(const RunConfig& c) {
  if (!(c.grid.q_min >= 2.0)) throw DomainError("Q_min must be >= 2");
  if (!(c.X_max >= c.grid.q_min)) throw DomainError("X_max must be >= Q_min");
  if (c.grid.points < 8) throw DomainError("points must be >= 8");
  if (c.threads < 1) throw DomainError("threads must be >= 1");
}

MultiplicativeFunction resolve_function(const RunConfig& c) {
  if (c.inline_function) return make_function(*c.inline_function);
  return catalog::by_name(c.function);
}

void apply_run_block(const std::map<std::string, std::string>& run, RunConfig& c) {
  for (const auto& [key, value] : run) {
    if (key == "function") {
      c.function = value;
      c.inline_function.reset();
    } else if (key == "kappa") {
      c.kappa = parse_value(value, key);
    } else if (key == "h") {
      c.h = parse_number<int>(value, key);
    } else if (key == "X") {
      c.X_max = parse_value(value, key);
    } else if (key == "Q_min") {
      c.grid.q_min = parse_value(value, key);
    } else if (key == "points") {
      c.grid.points = parse_number<int>(value, key);
    } else if (key == "ratio") {
      c.grid.ratio = parse_value(value, key);
    } else if (key == "threads") {
      c.threads = parse_number<int>(value, key);
    } else if (key == "margin") {
      c.margin = parse_value(value, key);
    } else if (key == "format") {
      if (value == "csv") {
        c.format = OutputFormat::csv;
      } else if (value == "json") {
        c.format = OutputFormat::json;
      } else {
        throw DomainError("format must be csv|json");
      }
    } else if (key == "out") {
      c.output = value;
    } else {
      throw DomainError(fmt::format("config: unknown [run] key '{}'", key));
    }
  }
}

}  // namespace lf
