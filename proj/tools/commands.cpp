#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qhs/numeval.hpp"
#include "qhs/qhermite.hpp"
#include "qhs/sobolev.hpp"
#include "qhs/verify.hpp"

namespace qhs::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kDefaultDigits = 34;
constexpr int kMinDigits = 15;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PrecisionTooLow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int env_precision() {
  const char* env = std::getenv("QHS_PRECISION");
  if (env == nullptr || *env == '\0') return kDefaultDigits;
  try {
    std::size_t used = 0;
    const int v = std::stoi(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("QHS_PRECISION is not an integer: ") + env);
  }
}

Rational rational_arg(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

// Values shared by the subcommands; each command reads the ones it declares.
struct Args {
  std::string q;
  std::string alpha;
  int j = 0;
  std::string lambda;
  std::string lambda_hat;
  int n_max = 5;
  int precision = kDefaultDigits;
  std::string format = "csv";
  std::vector<std::string> checks;
  std::string base_file;
  std::vector<int> n_list;
  std::string x_min = "-1";
  std::string x_max = "1";
  int samples = 201;
  std::string tolerance = "1e-8";
};

QContext make_context(const Args& a, MassSpec mass) {
  QContext ctx{rational_arg("--q", a.q), rational_arg("--alpha", a.alpha), a.j, std::move(mass)};
  try {
    ctx.validate();
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  return ctx;
}

MassSpec mass_from(const Args& a) {
  if (a.lambda.empty() == a.lambda_hat.empty()) throw UsageError("give exactly one of --lambda and --lambda-hat");
  if (!a.lambda_hat.empty()) return ExactMass{rational_arg("--lambda-hat", a.lambda_hat)};
  return NumericMass{rational_arg("--lambda", a.lambda), a.precision};
}

void require_precision(int digits) {
  if (digits < kMinDigits) {
    throw PrecisionTooLow("precision " + std::to_string(digits) + " is below the minimum of " +
                          std::to_string(kMinDigits) + " digits");
  }
}

NumericConfig numeric_config(int digits) {
  NumericConfig cfg;
  cfg.digits = digits;
  return cfg;
}

json context_json(const QContext& ctx) {
  json c;
  c["q"] = to_string(ctx.q);
  c["alpha"] = to_string(ctx.alpha);
  c["j"] = ctx.j;
  if (const auto* m = std::get_if<NumericMass>(&ctx.mass)) {
    c["lambda"] = to_string(m->lambda);
  } else {
    c["lambda_hat"] = to_string(ctx.mass_hat());
  }
  return c;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

std::vector<std::string> exact_coefficients(const Poly& p) {
  std::vector<std::string> v;
  if (p.is_zero()) v.push_back("0");
  for (const auto& c : p.coefficients()) v.push_back(to_string(c));
  return v;
}

std::vector<std::string> decimal_coefficients(const Poly& p, int digits) {
  std::vector<std::string> v;
  if (p.is_zero()) v.push_back("0");
  for (const auto& c : p.coefficients()) v.push_back(to_decimal(c, digits));
  return v;
}

// classical

int cmd_classical(const Args& a, std::ostream& out) {
  const Rational q = rational_arg("--q", a.q);
  if (a.n_max < 0) throw UsageError("--n-max must be nonnegative");
  HermiteFamily fam = [&] {
    try {
      return build_family(q, a.n_max);
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    }
  }();
  if (a.format == "json") {
    json doc;
    doc["command"] = "classical";
    doc["context"] = {{"q", to_string(q)}};
    json rows = json::array();
    for (int n = 0; n <= a.n_max; ++n) {
      rows.push_back({{"n", n},
                      {"gamma", to_string(fam.gamma(n))},
                      {"norm_hat", to_string(fam.norm_hat(n))},
                      {"coefficients", exact_coefficients(fam.poly(n))}});
    }
    doc["rows"] = rows;
    out << doc.dump(2) << "\n";
  } else {
    out << "n,gamma,norm_hat,coefficients\n";
    for (int n = 0; n <= a.n_max; ++n) {
      out << n << "," << to_string(fam.gamma(n)) << "," << to_string(fam.norm_hat(n)) << ","
          << join(exact_coefficients(fam.poly(n)), " ") << "\n";
    }
  }
  return kOk;
}

// sobolev

int cmd_sobolev(const Args& a, std::ostream& out) {
  if (a.n_max < 0) throw UsageError("--n-max must be nonnegative");
  const QContext input = make_context(a, mass_from(a));
  const bool numeric = !input.has_exact_mass();
  if (numeric) require_precision(a.precision);
  const NumericConfig cfg = numeric_config(std::max(a.precision, kMinDigits));
  const QContext exact = to_exact_context(input, cfg);
  const SobolevFamily fam(exact, a.n_max);

  auto coeffs = [&](const Poly& p) { return numeric ? decimal_coefficients(p, a.precision) : exact_coefficients(p); };
  auto scalar = [&](const Rational& r) { return numeric ? to_decimal(r, a.precision) : to_string(r); };

  if (a.format == "json") {
    json doc;
    doc["command"] = "sobolev";
    doc["context"] = context_json(input);
    if (numeric) {
      doc["lambda_hat"] = to_string(exact.mass_hat());
      doc["lambda_hat_digits"] = cfg.mass_round_digits;
      doc["digits"] = a.precision;
    }
    doc["exact"] = !numeric;
    json rows = json::array();
    for (int n = 0; n <= a.n_max; ++n) {
      rows.push_back({{"n", n}, {"mass_factor", scalar(fam.mass_factor(n))}, {"coefficients", coeffs(fam.poly(n))}});
    }
    doc["rows"] = rows;
    out << doc.dump(2) << "\n";
  } else {
    out << "n,mass_factor,coefficients\n";
    for (int n = 0; n <= a.n_max; ++n) {
      out << n << "," << scalar(fam.mass_factor(n)) << "," << join(coeffs(fam.poly(n)), " ") << "\n";
    }
  }
  return kOk;
}

// verify

HermiteFamily read_base(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    const json doc = json::parse(in);
    const Rational q = parse_rational(doc.at("context").at("q").get<std::string>());
    std::vector<Poly> polys;
    std::vector<Rational> gammas, norms;
    for (const auto& row : doc.at("rows")) {
      std::vector<Rational> c;
      for (const auto& s : row.at("coefficients")) c.push_back(parse_rational(s.get<std::string>()));
      polys.emplace_back(std::move(c));
      gammas.push_back(parse_rational(row.at("gamma").get<std::string>()));
      norms.push_back(parse_rational(row.at("norm_hat").get<std::string>()));
    }
    return HermiteFamily::from_rows(q, std::move(polys), std::move(gammas), std::move(norms));
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

int cmd_verify(const Args& a, std::ostream& out) {
  if (a.lambda_hat.empty()) throw UsageError("--lambda-hat is required");
  if (a.n_max < 0) throw UsageError("--n-max must be nonnegative");
  const QContext ctx = make_context(a, ExactMass{rational_arg("--lambda-hat", a.lambda_hat)});

  VerifyOptions opts;
  opts.n_max = a.n_max;
  for (const auto& c : a.checks) {
    if (c == "all") {
      opts.checks.clear();
      break;
    }
    opts.checks.push_back(c);
  }
  if (!a.base_file.empty()) {
    opts.base_override = read_base(a.base_file);
    if (opts.base_override->q() != ctx.q) throw UsageError("--base table was built for a different q");
  }

  const auto start = std::chrono::steady_clock::now();
  std::vector<CheckResult> results;
  try {
    results = run_checks(ctx, opts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = all_passed(results);

  if (a.format == "json") {
    json doc;
    doc["command"] = "verify";
    doc["context"] = context_json(ctx);
    doc["n_max"] = a.n_max;
    std::map<std::string, json> grouped;
    json order = json::array();
    for (const auto& r : results) {
      auto [it, fresh] = grouped.try_emplace(r.identity, json{{"identity", r.identity},
                                                              {"n_range", {r.n, r.n}},
                                                              {"status", "pass"},
                                                              {"failures", json::array()}});
      if (fresh) order.push_back(r.identity);
      json& g = it->second;
      g["n_range"][0] = std::min(g["n_range"][0].get<int>(), r.n);
      g["n_range"][1] = std::max(g["n_range"][1].get<int>(), r.n);
      if (!r.passed) {
        g["status"] = "fail";
        g["failures"].push_back({{"n", r.n}, {"context", context_json(ctx)}, {"residual", r.witness}});
      }
    }
    json checks = json::array();
    for (const auto& name : order) checks.push_back(grouped[name.get<std::string>()]);
    doc["checks"] = checks;
    doc["passed"] = ok;
    doc["elapsed_seconds"] = elapsed;
    out << doc.dump(2) << "\n";
  } else {
    out << "identity,n,status,residual\n";
    for (const auto& r : results) {
      out << r.identity << "," << r.n << "," << (r.passed ? "pass" : "fail") << "," << csv_field(r.witness) << "\n";
    }
  }
  return ok ? kOk : kViolation;
}

// plot-data

int cmd_plot_data(const Args& a, std::ostream& out) {
  if (a.n_list.empty()) throw UsageError("--n-list must name at least one index");
  if (a.samples < 1) throw UsageError("--samples must be positive");
  int top = 0;
  for (int n : a.n_list) {
    if (n < 0) throw UsageError("--n-list entries must be nonnegative");
    top = std::max(top, n);
  }
  const Rational lo = rational_arg("--x-min", a.x_min);
  const Rational hi = rational_arg("--x-max", a.x_max);
  if (hi < lo) throw UsageError("--x-max is below --x-min");

  const QContext input = make_context(a, mass_from(a));
  if (!input.has_exact_mass()) require_precision(a.precision);
  const NumericConfig cfg = numeric_config(std::max(a.precision, kMinDigits));
  const SobolevFamily fam(to_exact_context(input, cfg), top);

  std::vector<Rational> xs;
  for (int i = 0; i < a.samples; ++i) {
    xs.push_back(a.samples == 1 ? lo : Rational(lo + (hi - lo) * Rational(i, a.samples - 1)));
  }
  const int digits = std::min(a.precision, 17);

  if (a.format == "json") {
    json doc;
    doc["command"] = "plot-data";
    doc["context"] = context_json(input);
    doc["digits"] = digits;
    json x = json::array();
    for (const auto& t : xs) x.push_back(to_decimal(t, digits));
    doc["x"] = x;
    json series = json::array();
    for (int n : a.n_list) {
      json values = json::array();
      for (const auto& t : xs) values.push_back(to_decimal(fam.poly(n)(t), digits));
      series.push_back({{"n", n}, {"values", values}});
    }
    doc["series"] = series;
    out << doc.dump(2) << "\n";
  } else {
    out << "x";
    for (int n : a.n_list) out << ",HH_" << n;
    out << "\n";
    for (const auto& t : xs) {
      out << to_decimal(t, digits);
      for (int n : a.n_list) out << "," << to_decimal(fam.poly(n)(t), digits);
      out << "\n";
    }
  }
  return kOk;
}

// gram

int cmd_gram(const Args& a, std::ostream& out, std::ostream& err) {
  if (a.lambda.empty()) throw UsageError("--lambda is required");
  if (a.n_max < 0) throw UsageError("--n-max must be nonnegative");
  const QContext input = make_context(a, NumericMass{rational_arg("--lambda", a.lambda), a.precision});
  require_precision(a.precision);
  const NumericConfig cfg = numeric_config(a.precision);
  const Rational tol = rational_arg("--tolerance", a.tolerance);

  const QContext exact = to_exact_context(input, cfg);
  const SobolevFamily fam(exact, a.n_max);
  std::vector<Poly> basis;
  for (int n = 0; n <= a.n_max; ++n) basis.push_back(fam.poly(n));
  const auto gram = gram_matrix(basis, input, cfg);

  const WorkingPrecision guard(a.precision + 8);
  const Real worst = max_relative_off_diagonal(gram);
  const bool ok = worst < to_real(tol);
  auto fmt = [&](const Real& v) { return v.str(a.precision, std::ios_base::scientific); };

  if (a.format == "json") {
    json doc;
    doc["command"] = "gram";
    doc["context"] = context_json(input);
    doc["lambda_hat"] = to_string(exact.mass_hat());
    doc["digits"] = a.precision;
    json m = json::array();
    for (const auto& row : gram) {
      json r = json::array();
      for (const auto& v : row) r.push_back(fmt(v));
      m.push_back(r);
    }
    doc["matrix"] = m;
    doc["max_relative_off_diagonal"] = fmt(worst);
    doc["tolerance"] = a.tolerance;
    doc["passed"] = ok;
    out << doc.dump(2) << "\n";
  } else {
    out << "m,n,value\n";
    for (std::size_t i = 0; i < gram.size(); ++i) {
      for (std::size_t k = 0; k < gram.size(); ++k) out << i << "," << k << "," << fmt(gram[i][k]) << "\n";
    }
    err << "max relative off-diagonal: " << fmt(worst) << (ok ? "" : " (above tolerance)") << "\n";
  }
  return ok ? kOk : kViolation;
}

void add_format(CLI::App* cmd, Args& a) {
  cmd->add_option("--format", a.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

void add_context(CLI::App* cmd, Args& a) {
  cmd->add_option("--alpha", a.alpha, "point-mass location, |alpha| > 1")->required();
  cmd->add_option("--j", a.j, "q-derivative order of the point mass")->required();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Args a;
  CLI::App app{"Exact discrete q-Hermite I and Sobolev-type polynomial toolkit", "qhs"};
  app.require_subcommand(1);

  try {
    a.precision = env_precision();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  auto* classical = app.add_subcommand("classical", "Table of H_n with gamma_n and normalized norms");
  classical->add_option("--q", a.q)->required();
  classical->add_option("--n-max", a.n_max);
  add_format(classical, a);

  auto* sobolev = app.add_subcommand("sobolev", "Table of the Sobolev-type polynomials");
  sobolev->add_option("--q", a.q)->required();
  add_context(sobolev, a);
  auto* lam = sobolev->add_option("--lambda", a.lambda, "point mass (numeric mode)");
  sobolev->add_option("--lambda-hat", a.lambda_hat, "normalized point mass (exact mode)")->excludes(lam);
  sobolev->add_option("--n-max", a.n_max);
  sobolev->add_option("--precision", a.precision, "decimal digits in numeric mode");
  add_format(sobolev, a);

  auto* verify = app.add_subcommand("verify", "Exact residual checks of every identity");
  verify->add_option("--q", a.q)->required();
  add_context(verify, a);
  verify->add_option("--lambda-hat", a.lambda_hat)->required();
  verify->add_option("--n-max", a.n_max);
  verify->add_option("--checks", a.checks, "comma-separated identity names, or all")->delimiter(',');
  verify->add_option("--base", a.base_file, "classical JSON table replacing the computed base family");
  add_format(verify, a);

  auto* plot = app.add_subcommand("plot-data", "Sampled values of the Sobolev-type polynomials");
  plot->add_option("--q", a.q)->required();
  add_context(plot, a);
  auto* plam = plot->add_option("--lambda", a.lambda);
  plot->add_option("--lambda-hat", a.lambda_hat)->excludes(plam);
  plot->add_option("--n-list", a.n_list, "indices to sample, comma-separated")->delimiter(',')->required();
  plot->add_option("--x-min", a.x_min);
  plot->add_option("--x-max", a.x_max);
  plot->add_option("--samples", a.samples);
  plot->add_option("--precision", a.precision);
  add_format(plot, a);

  auto* gram = app.add_subcommand("gram", "Numeric Gram matrix under the Sobolev-type inner product");
  gram->add_option("--q", a.q)->required();
  add_context(gram, a);
  gram->add_option("--lambda", a.lambda)->required();
  gram->add_option("--n-max", a.n_max);
  gram->add_option("--precision", a.precision);
  gram->add_option("--tolerance", a.tolerance, "bound on relative off-diagonal entries");
  add_format(gram, a);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (classical->parsed()) return cmd_classical(a, out);
    if (sobolev->parsed()) return cmd_sobolev(a, out);
    if (verify->parsed()) return cmd_verify(a, out);
    if (plot->parsed()) return cmd_plot_data(a, out);
    if (gram->parsed()) return cmd_gram(a, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PrecisionTooLow& e) {
    err << "warning: " << e.what() << "\n";
    return kPrecisionWarning;
  }
  return kUsage;
}

}  // namespace qhs::cli
