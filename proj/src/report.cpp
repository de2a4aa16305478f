#include "lf/report.hpp"

#include <cmath>

#include <fmt/format.h>

namespace lf::report {
namespace {

Json num(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json num_array(const std::vector<double>& values) {
  Json out = Json::array();
  for (double v : values) out.push_back(num(v));
  return out;
}

Json complex_array(const std::vector<std::complex<double>>& roots) {
  Json out = Json::array();
  for (const auto& z : roots) out.push_back(Json::array({num(z.real()), num(z.imag())}));
  return out;
}

}  // namespace

std::string number(double v) { return fmt::format("{:.17g}", v); }

std::string lambda_table_csv(const LambdaTable& table) {
  std::string out = "p,m,value\n";
  for (const auto& e : table.entries()) out += fmt::format("{},{},{}\n", e.p, e.m, number(e.value));
  return out;
}

std::string sequence_csv(const CoeffSeq& seq) {
  std::string out = "n,value\n";
  for (std::uint64_t n = 1; n <= seq.n_max(); ++n) out += fmt::format("{},{}\n", n, number(seq[n]));
  return out;
}

std::string series_csv(const SumSeries& s) {
  std::string out = "X,value\n";
  for (std::size_t i = 0; i < s.grid.size(); ++i) {
    out += fmt::format("{},{}\n", number(s.grid[i]), number(s.sums[i]));
  }
  return out;
}

Json series_json(const SumSeries& s) {
  Json j;
  j["function"] = s.f_name;
  j["kind"] = to_string(s.kind);
  j["order"] = s.order;
  j["grid"] = num_array(s.grid);
  j["sums"] = num_array(s.sums);
  return j;
}

std::string hypothesis_csv(const HypothesisReport& r) {
  std::string out = "Q,value,scaled_residual\n";
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    out += fmt::format("{},{},{}\n", number(r.grid[i]), number(r.s0[i]),
                       number(r.scaled_residual[i]));
  }
  return out;
}

Json hypothesis_json(const HypothesisReport& r) {
  Json j;
  j["function"] = r.f_name;
  j["kappa"] = num(r.kappa);
  j["h"] = r.h;
  j["eta0_hat"] = num(r.eta0_hat);
  j["A_hat"] = num(r.A_hat);
  j["eta_k_hat"] = num_array(r.eta_k_hat);
  j["max_scaled_residual"] = num(r.max_scaled_residual);
  j["grid_size"] = r.grid_size;
  return j;
}

std::string fit_csv(const AsymptoticFit& fit, const SumSeries& s) {
  std::string out = "X,value,residual,scaled_residual\n";
  for (std::size_t i = 0; i < fit.grid.size(); ++i) {
    out += fmt::format("{},{},{},{}\n", number(fit.grid[i]), number(s.sums[i]),
                       number(fit.residuals[i]), number(fit.scaled_residuals[i]));
  }
  return out;
}

Json fit_json(const AsymptoticFit& fit, const std::string& f_name) {
  Json j;
  j["function"] = f_name;
  j["kappa"] = num(fit.kappa);
  j["h"] = fit.h;
  j["C_hat"] = num(fit.C_hat);
  j["a_hat"] = num_array(fit.a_hat);
  j["tail_coeff"] = num(fit.tail_coeff);
  j["envelope_exponent"] = num(fit.envelope_exponent);
  j["margin"] = num(fit.margin);
  j["max_scaled_residual"] = num(fit.max_scaled_residual);
  j["envelope_ok"] = fit.envelope_ok;
  j["grid"] = num_array(fit.grid);
  j["residuals"] = num_array(fit.residuals);
  return j;
}

std::string roots_csv(const RootSet& r) {
  std::string out = "re,im\n";
  for (const auto& z : r.roots) out += fmt::format("{},{}\n", number(z.real()), number(z.imag()));
  return out;
}

Json roots_json(const RootSet& r) {
  Json j;
  j["h"] = r.h;
  j["kappa"] = num(r.kappa);
  j["roots"] = complex_array(r.roots);
  return j;
}

std::string constant_csv(const ConstantReport& c) {
  return fmt::format(
      "function,kappa,h,P_max,euler_product,tail_bound,gamma,C_theoretical,C_literal\n"
      "{},{},{},{},{},{},{},{},{}\n",
      c.function, number(c.kappa), c.h, c.product.P_max, number(c.product.value),
      number(c.product.tail_bound), number(c.gamma), number(c.C_theoretical),
      number(c.C_literal));
}

Json constant_json(const ConstantReport& c) {
  Json j;
  j["function"] = c.function;
  j["kappa"] = num(c.kappa);
  j["h"] = c.h;
  j["P_max"] = c.product.P_max;
  j["euler_product"] = num(c.product.value);
  j["tail_bound"] = num(c.product.tail_bound);
  j["gamma"] = num(c.gamma);
  j["C_theoretical"] = num(c.C_theoretical);
  j["C_literal"] = num(c.C_literal);
  return j;
}

Json verify_json(const VerifyReport& r) {
  Json j;
  j["function"] = r.function;
  j["kappa"] = num(r.kappa);
  j["h"] = r.h;
  j["X_max"] = num(r.X_max);
  j["eta0_hat"] = num(r.eta0_hat);
  j["A_hat"] = num(r.A_hat);
  j["C_hat"] = num(r.C_hat);
  j["C_theoretical"] = num(r.C_theoretical);
  j["rel_gap"] = num(r.rel_gap);
  j["a_hat"] = num_array(r.a_hat);
  j["envelope_ok"] = r.envelope_ok;
  j["roots"] = complex_array(r.roots);
  j["lifeagain_gap"] = num(r.lifeagain_gap);
  j["C_literal"] = num(r.C_literal);
  j["margin"] = num(r.margin);
  j["margin_source"] = r.margin_source;
  j["max_scaled_residual"] = num(r.max_scaled_residual);
  j["lifeagain_coeff"] = num(r.lifeagain_coeff);
  j["lifeagain_expected"] = num(r.lifeagain_expected);
  j["lifeagain_X"] = num(r.lifeagain_X);
  j["failures"] = r.failures;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lf::report
