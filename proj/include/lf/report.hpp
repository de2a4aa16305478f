#pragma once

#include <string>

#include <json.hpp>

#include "lf/coeff_seq.hpp"
#include "lf/euler.hpp"
#include "lf/fit.hpp"
#include "lf/lambda.hpp"
#include "lf/roots.hpp"
#include "lf/sums.hpp"
#include "lf/verify.hpp"

// CSV output: header row, comma separated, 17 significant digits, LF line
// endings. JSON output keeps keys in insertion order.
namespace lf::report {

using Json = nlohmann::ordered_json;

std::string number(double v);

std::string lambda_table_csv(const LambdaTable& table);
std::string sequence_csv(const CoeffSeq& seq);
std::string series_csv(const SumSeries& series);
Json series_json(const SumSeries& series);
std::string hypothesis_csv(const HypothesisReport& report);
Json hypothesis_json(const HypothesisReport& report);
std::string fit_csv(const AsymptoticFit& fit, const SumSeries& series);
Json fit_json(const AsymptoticFit& fit, const std::string& f_name);
std::string roots_csv(const RootSet& roots);
Json roots_json(const RootSet& roots);

struct ConstantReport {
  std::string function;
  double kappa = 0.0;
  int h = 0;
  EulerProduct product;
  double gamma = 0.0;  // Gamma(kappa + 1)
  double C_theoretical = 0.0;
  double C_literal = 0.0;
};
std::string constant_csv(const ConstantReport& c);
Json constant_json(const ConstantReport& c);

Json verify_json(const VerifyReport& report);

// JSON text with a trailing newline.
std::string dump(const Json& j);

}  // namespace lf::report
