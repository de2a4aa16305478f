#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "lf/config.hpp"
#include "lf/convolution.hpp"
#include "lf/errors.hpp"
#include "lf/euler.hpp"
#include "lf/fit.hpp"
#include "lf/grid.hpp"
#include "lf/lambda.hpp"
#include "lf/report.hpp"
#include "lf/roots.hpp"
#include "lf/selfcheck.hpp"
#include "lf/sums.hpp"
#include "lf/verify.hpp"

namespace lf::cli {
namespace {

// Raw flag values; applied on top of the config file only when given.
struct Flags {
  std::string f;
  double N = 0;
  double X = 0;
  double q_min = 0;
  int points = 0;
  double ratio = 0;
  double kappa = 0;
  int h = 0;
  int k = 0;
  std::string weight = "log_n";
  double P_max = 1e6;
  double margin = 0;
  int threads = 1;
  std::string format;
  std::string out;
  std::string config;
};

struct Options {
  CLI::Option* f = nullptr;
  CLI::Option* N = nullptr;
  CLI::Option* X = nullptr;
  CLI::Option* q_min = nullptr;
  CLI::Option* points = nullptr;
  CLI::Option* ratio = nullptr;
  CLI::Option* kappa = nullptr;
  CLI::Option* h = nullptr;
  CLI::Option* k = nullptr;
  CLI::Option* weight = nullptr;
  CLI::Option* P_max = nullptr;
  CLI::Option* margin = nullptr;
  CLI::Option* threads = nullptr;
  CLI::Option* format = nullptr;
  CLI::Option* out = nullptr;
  CLI::Option* config = nullptr;
};

void add_common(CLI::App* sub, Flags& flags, Options& o) {
  o.f = sub->add_option("--f", flags.f, "Catalog function name (one, mu_sq, tau_3, sf_const(c), ...)");
  o.kappa = sub->add_option("--kappa", flags.kappa, "kappa (defaults to the function's claimed value)");
  o.h = sub->add_option("--h", flags.h, "Order h");
  o.threads = sub->add_option("--threads", flags.threads, "Worker threads (env LF_THREADS)");
  o.format = sub->add_option("--format", flags.format, "csv | json");
  o.out = sub->add_option("--out", flags.out, "Output path (default stdout)");
  o.config = sub->add_option("--config", flags.config, "Config file with [function] / [run] blocks");
  o.N = sub->add_option("--N", flags.N, "Upper bound for dense tables");
  o.X = sub->add_option("--X", flags.X, "Upper end X_max of the sampling grid");
  o.q_min = sub->add_option("--Q-min", flags.q_min, "Lower end of the sampling grid");
  o.points = sub->add_option("--points", flags.points, "Number of grid points");
  o.ratio = sub->add_option("--ratio", flags.ratio, "Grid ratio (default: derived from points)");
  o.k = sub->add_option("--k", flags.k, "Order k of the weighted sum");
  o.weight = sub->add_option("--weight", flags.weight, "log_n | log_X_over_n | s_k | lambda_fh");
  o.P_max = sub->add_option("--P-max", flags.P_max, "Euler product prime bound");
  o.margin = sub->add_option("--margin", flags.margin, "Envelope margin (default: reference fit)");
}

RunConfig build_config(const Flags& flags, const Options& o) {
  RunConfig c;
  if (const char* env = std::getenv("LF_THREADS")) {
    try {
      c.threads = std::stoi(env);
    } catch (const std::exception&) {
      throw DomainError(fmt::format("LF_THREADS='{}' is not an integer", env));
    }
  }
  if (o.config->count()) {
    const auto file = load_config(flags.config);
    if (file.function) {
      c.inline_function = file.function;
      c.function = file.function->name;
      c.h = file.function->h;
    }
    apply_run_block(file.run, c);
  }
  if (o.f->count()) {
    c.function = flags.f;
    c.inline_function.reset();
  }
  if (o.kappa->count()) c.kappa = flags.kappa;
  if (o.h->count()) c.h = flags.h;
  if (o.X->count()) c.X_max = flags.X;
  if (o.q_min->count()) c.grid.q_min = flags.q_min;
  if (o.points->count()) c.grid.points = flags.points;
  if (o.ratio->count()) c.grid.ratio = flags.ratio;
  if (o.threads->count()) c.threads = flags.threads;
  if (o.margin->count()) c.margin = flags.margin;
  if (o.out->count()) c.output = flags.out;
  if (o.format->count()) {
    if (flags.format == "csv") {
      c.format = OutputFormat::csv;
    } else if (flags.format == "json") {
      c.format = OutputFormat::json;
    } else {
      throw DomainError("--format must be csv or json");
    }
  }
  if (c.threads < 1) throw DomainError("--threads must be >= 1");
  if (c.h < 0) throw DomainError("--h must be >= 0");
  return c;
}

std::uint64_t as_count(double v, const char* name) {
  if (!(v >= 1.0) || v != std::floor(v) || v > 1.8e19) {
    throw DomainError(fmt::format("{} must be a positive integer", name));
  }
  return static_cast<std::uint64_t>(v);
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.output, std::ios::binary);
  if (!file) throw DomainError(fmt::format("cannot write '{}'", c.output));
  file << text;
}

double kappa_of(const RunConfig& c, const MultiplicativeFunction& f) {
  return c.kappa ? *c.kappa : f.kappa_claimed();
}

std::vector<double> sampling_grid(const RunConfig& c) {
  validate(c);
  return geometric_grid(c.X_max, c.grid);
}

int cmd_lambda(const RunConfig& c, const Flags& flags, const Options& o, std::ostream& out) {
  if (!o.N->count()) throw DomainError("lambda needs --N");
  const auto f = resolve_function(c);
  const std::uint64_t N = as_count(flags.N, "--N");
  const Exec exec{c.threads};
  if (o.h->count()) {
    const auto seq = lambda_fh(f, c.h, N, exec);
    if (c.format == OutputFormat::json) {
      report::Json j;
      j["function"] = f.name();
      j["h"] = c.h;
      j["N"] = N;
      report::Json values = report::Json::array();
      for (double v : seq.values()) values.push_back(v);
      j["values"] = values;
      emit(c, report::dump(j), out);
    } else {
      emit(c, report::sequence_csv(seq), out);
    }
    return kOk;
  }
  if (N < 2) throw DomainError("lambda needs --N >= 2");
  const auto table = lambda_table(f, N, exec);
  if (c.format == OutputFormat::json) {
    report::Json j;
    j["function"] = f.name();
    j["N"] = N;
    report::Json entries = report::Json::array();
    for (const auto& e : table.entries()) entries.push_back({e.p, e.m, e.value});
    j["entries"] = entries;
    emit(c, report::dump(j), out);
  } else {
    emit(c, report::lambda_table_csv(table), out);
  }
  return kOk;
}

int cmd_sums(const RunConfig& c, const Flags& flags, const Options& o, std::ostream& out) {
  const auto f = resolve_function(c);
  if (!o.X->count() && !o.config->count()) throw DomainError("sums needs --X");
  std::vector<double> grid;
  if (c.X_max < c.grid.q_min || c.grid.points == 1) {
    if (!(c.X_max >= 1.0)) throw DomainError("--X must be >= 1");
    grid = {c.X_max};
  } else {
    grid = geometric_grid(c.X_max, c.grid);
  }
  const Exec exec{c.threads};
  SumSeries series;
  if (flags.weight == "log_n") {
    series = measure_series(f, SeriesKind::logn_pow, flags.k, grid, exec);
  } else if (flags.weight == "log_X_over_n") {
    series = measure_series(f, SeriesKind::G_j, flags.k, grid, exec);
  } else if (flags.weight == "s_k") {
    series = measure_series(f, SeriesKind::S_k, flags.k, grid, exec);
  } else if (flags.weight == "lambda_fh") {
    series = measure_series(f, SeriesKind::lambda_fh_over_n, c.h, grid, exec);
  } else {
    throw DomainError("--weight must be log_n, log_X_over_n, s_k or lambda_fh");
  }
  emit(c, c.format == OutputFormat::json ? report::dump(report::series_json(series))
                                         : report::series_csv(series),
       out);
  return kOk;
}

int cmd_hypothesis(const RunConfig& c, std::ostream& out) {
  const auto f = resolve_function(c);
  const auto r = check_hypothesis(f, kappa_of(c, f), c.h, sampling_grid(c), Exec{c.threads});
  emit(c, c.format == OutputFormat::json ? report::dump(report::hypothesis_json(r))
                                         : report::hypothesis_csv(r),
       out);
  return kOk;
}

int cmd_constant(const RunConfig& c, const Flags& flags, std::ostream& out) {
  const auto f = resolve_function(c);
  const double kappa = kappa_of(c, f);
  const auto P = as_count(flags.P_max, "--P-max");
  report::ConstantReport r;
  r.function = f.name();
  r.kappa = kappa;
  r.h = c.h;
  r.product = euler_product(f, kappa, P);
  r.gamma = gamma_eval(kappa + 1.0);
  r.C_theoretical = theoretical_leading(f, kappa, c.h, P);
  r.C_literal = euler_product_literal(f, kappa, P).value / r.gamma;
  emit(c, c.format == OutputFormat::json ? report::dump(report::constant_json(r))
                                         : report::constant_csv(r),
       out);
  return kOk;
}

int cmd_roots(const RunConfig& c, std::ostream& out) {
  const double kappa = c.kappa ? *c.kappa : resolve_function(c).kappa_claimed();
  const auto r = characteristic_roots(c.h, kappa);
  emit(c, c.format == OutputFormat::json ? report::dump(report::roots_json(r))
                                         : report::roots_csv(r),
       out);
  return kOk;
}

int cmd_fit(const RunConfig& c, std::ostream& out) {
  const auto f = resolve_function(c);
  if (f.allow_signed()) throw DomainError("fit: signed functions are not accepted");
  const double kappa = kappa_of(c, f);
  const auto grid = sampling_grid(c);
  const Exec exec{c.threads};
  const double margin = c.margin ? *c.margin : reference_margin(c.h, grid, exec);
  const auto series = measure_series(f, SeriesKind::logn_pow, c.h + 1, grid, exec);
  const auto fit = fit_expansion(series, kappa, c.h, margin);
  emit(c, c.format == OutputFormat::json ? report::dump(report::fit_json(fit, f.name()))
                                         : report::fit_csv(fit, series),
       out);
  return kOk;
}

int cmd_verify(const RunConfig& c, const Flags& flags, const Options& o, std::ostream& out) {
  if (o.format->count() && c.format != OutputFormat::json) {
    throw DomainError("verify emits JSON only");
  }
  const auto f = resolve_function(c);
  validate(c);
  VerifyOptions opts;
  opts.X_max = c.X_max;
  opts.grid = c.grid;
  opts.margin = c.margin;
  opts.P_max = as_count(flags.P_max, "--P-max");
  const auto r = verify_theorem(f, kappa_of(c, f), c.h, opts, Exec{c.threads});
  emit(c, report::dump(report::verify_json(r)), out);
  return r.failures.empty() ? kOk : kNumericError;
}

int cmd_selfcheck(const RunConfig& c, const Flags& flags, const Options& o, std::ostream& out) {
  const std::uint64_t N = o.N->count() ? as_count(flags.N, "--N") : 100'000;
  const auto results = run_selfcheck(N, Exec{c.threads});
  std::string text;
  bool all = true;
  for (const auto& r : results) {
    text += fmt::format("{} {}{}\n", r.passed ? "PASS" : "FAIL", r.name,
                        r.passed ? "" : " (" + r.detail + ")");
    all = all && r.passed;
  }
  emit(c, text, out);
  return all ? kOk : kNumericError;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized von Mangoldt functions and Levin-Fainleib asymptotics"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Flags flags;
  Options opts;
  const char* names[] = {"lambda", "sums", "hypothesis", "constant",
                         "roots",  "fit",  "verify",     "selfcheck"};
  const char* help[] = {
      "Dump Lambda_f on prime powers (p,m,value) or Lambda_{f,h} with --h (n,value)",
      "Weighted partial sums on a grid (X,value)",
      "Measure kappa, eta_0 and A of the prime-power hypothesis (Q,value,scaled_residual)",
      "Euler-product constant and the theoretical leading coefficient",
      "Roots of lambda(lambda-1)...(lambda-h) = kappa(kappa+1)...(kappa+h)",
      "Fit the asymptotic expansion of sum f(n)/n (log n)^{h+1}",
      "Full verification report (JSON)",
      "Run the invariant suite and print pass/fail per property"};
  for (int i = 0; i < 8; ++i) add_common(app.add_subcommand(names[i], help[i]), flags, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    // Every subcommand registers the same option set; look the values up on the one parsed.
    Options o;
    o.f = sub->get_option("--f");
    o.N = sub->get_option("--N");
    o.X = sub->get_option("--X");
    o.q_min = sub->get_option("--Q-min");
    o.points = sub->get_option("--points");
    o.ratio = sub->get_option("--ratio");
    o.kappa = sub->get_option("--kappa");
    o.h = sub->get_option("--h");
    o.k = sub->get_option("--k");
    o.weight = sub->get_option("--weight");
    o.P_max = sub->get_option("--P-max");
    o.margin = sub->get_option("--margin");
    o.threads = sub->get_option("--threads");
    o.format = sub->get_option("--format");
    o.out = sub->get_option("--out");
    o.config = sub->get_option("--config");

    RunConfig c = build_config(flags, o);
    if (name == "verify" && !o.format->count()) c.format = OutputFormat::json;
    if (name == "lambda") return cmd_lambda(c, flags, o, out);
    if (name == "sums") return cmd_sums(c, flags, o, out);
    if (name == "hypothesis") return cmd_hypothesis(c, out);
    if (name == "constant") return cmd_constant(c, flags, out);
    if (name == "roots") return cmd_roots(c, out);
    if (name == "fit") return cmd_fit(c, out);
    if (name == "verify") return cmd_verify(c, flags, o, out);
    return cmd_selfcheck(c, flags, o, out);
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomainError;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << "\n";
    return kNumericError;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return kCapacityError;
  }
}

}  // namespace lf::cli
