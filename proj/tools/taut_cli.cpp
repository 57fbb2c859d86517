#include <taut/checks.hpp>
#include <taut/cohft.hpp>
#include <taut/identities.hpp>
#include <taut/io.hpp>
#include <taut/wp.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>

using namespace taut;

namespace {

enum ExitCode { Ok = 0, CheckFailed = 1, UsageError = 2 };

std::size_t cache_limit_from_env()
{
  const char *v = std::getenv("TAUT_CACHE_LIMIT");
  if (!v || !*v) return Evaluator::unlimited;
  std::string s(v);
  if (s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("TAUT_CACHE_LIMIT must be a non-negative integer, got '" + s + "'");
  return std::stoull(s);
}

std::string monomial_text(const std::vector<std::string> &vars, const Exponents &e)
{
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += vars[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

void print_series(const TruncatedSeries &s)
{
  for (const auto &[e, c] : s.terms()) std::cout << monomial_text(s.variables(), e) << "\t" << to_string(c) << "\n";
}

struct NumberArgs {
  int genus = 0;
  std::string tau, kappa;
  std::optional<int> lambda;
};

int cmd_number(const NumberArgs &a, bool json)
{
  Evaluator ev(cache_limit_from_env());
  const auto m = parse_multi_index(IndexKind::S0, a.tau);
  const auto p = parse_multi_index(IndexKind::S1, a.kappa);
  Rational value;
  if (a.lambda && *a.lambda > 0) {
    if (m.max_index().value_or(0) > 0) throw std::invalid_argument("lambda_1 brackets accept only tau_0 insertions");
    value = ev.lambda_bracket(p, *a.lambda, static_cast<int>(m.count()), a.genus);
  } else {
    value = ev.bracket(a.genus, m, p);
  }
  if (json) {
    Json j{{"genus", a.genus}, {"m", to_string(m)}, {"p", to_string(p)}};
    if (a.lambda) j["lambda"] = *a.lambda;
    j["value"] = to_string(value);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_string(value) << "\n";
  }
  return Ok;
}

int cmd_table(int genus, const SeriesBounds &b, bool json)
{
  Evaluator ev(cache_limit_from_env());
  const auto h = build_H(ev, genus, b);
  if (json)
    std::cout << to_json(h).dump(2) << "\n";
  else
    print_series(h);
  return Ok;
}

struct VerifyArgs {
  std::string suite;
  std::optional<int> genus;
  unsigned n_max = 6, dim_max = 6, order = 12, seed = 1, trials = 50;
  SeriesBounds bounds;
  std::string s;
  std::string u = "0";
};

int report(const std::vector<CheckReport> &reports, bool json)
{
  bool ok = true;
  Json arr = Json::array();
  for (const auto &r : reports) {
    ok = ok && r.ok();
    if (json) {
      arr.push_back(to_json(r));
      continue;
    }
    std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.checked << " checked";
    if (!r.ok()) std::cout << ", " << r.failures << " failed; first: " << *r.first_counterexample;
    std::cout << "\n";
  }
  if (json) std::cout << Json{{"ok", ok}, {"checks", arr}}.dump(2) << "\n";
  return ok ? Ok : CheckFailed;
}

int cmd_verify(const VerifyArgs &a, bool json)
{
  Evaluator ev(cache_limit_from_env());
  std::vector<int> genera;
  if (a.genus) {
    if (*a.genus != 0 && *a.genus != 1) throw unsupported_genus(*a.genus);
    genera = {*a.genus};
  } else {
    genera = {0, 1};
  }
  std::vector<CheckReport> reports;
  const auto &s = a.suite;
  if (s == "routes") {
    for (int g : genera) reports.push_back(check_routes(ev, g, a.n_max, a.dim_max));
  } else if (s == "charge") {
    for (int g : genera) reports.push_back(check_charge(ev, g, a.bounds));
  } else if (s == "genus1-log") {
    reports.push_back(check_genus_one_relation(ev, a.bounds));
  } else if (s == "annihilators") {
    for (int g : genera)
      for (auto &r : check_annihilators(ev, g, a.bounds)) reports.push_back(std::move(r));
  } else if (s == "getzler") {
    const CohftPoint pt(parse_s_coordinates(a.s), parse_rational(a.u));
    CheckReport r("genus one equation at s={" + a.s + "} u=" + a.u);
    const auto residual = check_getzler(potential_from_point(ev, pt, a.order));
    for (unsigned k = 0; k <= residual.max_degree(); ++k) {
      const Rational c = residual.coefficient({k});
      r.record(c, [&] { return "coefficient of x^" + std::to_string(k) + " is " + to_string(c); });
    }
    reports.push_back(std::move(r));
  } else if (s == "product-rule") {
    reports.push_back(check_product_rule(a.seed, a.trials));
  } else if (s == "multinomial") {
    reports.push_back(check_genus_zero_multinomial(ev, a.n_max));
  } else if (s == "closed-form") {
    reports.push_back(check_genus_one_closed_form(ev, a.dim_max));
  } else if (s == "lambda") {
    reports.push_back(check_lambda_relations(ev, a.n_max, a.dim_max));
  } else {
    throw std::invalid_argument("unknown suite '" + s + "'");
  }
  return report(reports, json);
}

int cmd_wp(int genus, int n_max, bool asymptotic, bool json)
{
  Evaluator ev(cache_limit_from_env());
  if (genus != 0 && genus != 1) throw unsupported_genus(genus);
  const int first = genus == 0 ? 3 : 1;
  if (n_max < first) throw unstable_key("n-max must be at least " + std::to_string(first) + " in genus " + std::to_string(genus));
  const auto bc = bessel_constants();
  const auto rows = asymptotic_ratio_table(ev, genus, n_max, bc);
  if (json) {
    std::cout << volume_table_json(genus, rows, asymptotic ? &bc : nullptr).dump(2) << "\n";
    return Ok;
  }
  if (asymptotic) {
    std::cout << std::setprecision(12) << "gamma0 " << bc.gamma0 << "\nC " << bc.C << "\n";
    std::cout << std::setw(4) << "n" << "  " << std::setw(14) << "ratio(float)" << "  " << std::setw(14) << "asymptote(float)"
              << "  w\n";
  }
  for (const auto &r : rows) {
    std::cout << std::setw(4) << r.n << "  ";
    if (asymptotic)
      std::cout << std::setw(14) << std::setprecision(8) << r.ratio << "  " << std::setw(14) << std::setprecision(6) << r.asymptote
                << "  ";
    std::cout << to_string(r.w) << "\n";
  }
  return Ok;
}

int cmd_cohft(const std::string &s, const std::string &u, unsigned order, bool json)
{
  Evaluator ev(cache_limit_from_env());
  const CohftPoint pt(parse_s_coordinates(s), parse_rational(u));
  const auto pair = potential_from_point(ev, pt, order);
  const bool ok = order < 5 || check_getzler(pair).is_zero();
  if (json) {
    Json j{{"point", to_json(pt)}, {"potentials", to_json(pair)}, {"getzler_ok", ok}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "I_{0,n} and I_{1,n}:\n";
    for (unsigned n = 1; n <= order; ++n)
      std::cout << std::setw(4) << n << "  " << to_string(potential_coefficient(pair.phi0, n)) << "  "
                << to_string(potential_coefficient(pair.phi1, n)) << "\n";
    std::cout << "getzler_ok " << (ok ? "true" : "false") << "\n";
  }
  return ok ? Ok : CheckFailed;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Exact intersection numbers of psi, kappa and lambda_1 classes in genus 0 and 1"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON")->configurable(false);

  auto add_json = [&](CLI::App *sub) { sub->add_flag("--json", json, "Emit JSON"); };

  NumberArgs num;
  auto *number = app.add_subcommand("number", "Evaluate <tau^m kappa^p lambda_1^r>_g");
  number->add_option("--genus", num.genus, "Genus (0 or 1)")->required();
  number->add_option("--tau", num.tau, "Tau multi-index, e.g. 0:3,1:1");
  number->add_option("--kappa", num.kappa, "Kappa multi-index, e.g. 1:2");
  number->add_option("--lambda", num.lambda, "Power of lambda_1 (tau_0 insertions only)")->check(CLI::NonNegativeNumber);
  add_json(number);

  int table_genus = 0;
  SeriesBounds table_bounds;
  auto *table = app.add_subcommand("table", "Coefficients of H_g in a window of variables");
  table->add_option("--genus", table_genus, "Genus (0 or 1)")->required();
  table->add_option("--t-max", table_bounds.t_max, "Largest tau variable index");
  table->add_option("--s-max", table_bounds.s_max, "Largest s variable index");
  table->add_option("--degree", table_bounds.degree, "Total degree bound");
  add_json(table);

  VerifyArgs va;
  auto *verify = app.add_subcommand("verify", "Run an identity check");
  verify->add_option("suite", va.suite, "routes | charge | genus1-log | annihilators | getzler | product-rule | multinomial | closed-form | lambda")
      ->required()
      ->check(CLI::IsMember({"routes", "charge", "genus1-log", "annihilators", "getzler", "product-rule", "multinomial", "closed-form", "lambda"}));
  verify->add_option("--genus", va.genus, "Restrict to one genus");
  verify->add_option("--n-max", va.n_max, "Largest number of points");
  verify->add_option("--dim-max", va.dim_max, "Largest dimension (or weight bound for closed-form and lambda)");
  verify->add_option("--t-max", va.bounds.t_max, "Largest tau variable index");
  verify->add_option("--s-max", va.bounds.s_max, "Largest s variable index");
  verify->add_option("--degree", va.bounds.degree, "Total degree bound");
  verify->add_option("--s", va.s, "CohFT s coordinates, e.g. 1=1/2,2=0");
  verify->add_option("--u", va.u, "CohFT u coordinate");
  verify->add_option("--order", va.order, "Potential order")->check(CLI::Range(5u, 64u));
  verify->add_option("--seed", va.seed, "Seed for product-rule");
  verify->add_option("--trials", va.trials, "Trials for product-rule");
  add_json(verify);

  int wp_genus = 1, wp_n_max = 50;
  bool wp_asym = false;
  auto *wp = app.add_subcommand("wp", "Volumes w_{g,n} and their asymptotic ratios");
  wp->add_option("--genus", wp_genus, "Genus (0 or 1)")->required();
  wp->add_option("--n-max", wp_n_max, "Largest n");
  wp->add_flag("--asymptotic", wp_asym, "Add the asymptotic columns (floating point)");
  add_json(wp);

  std::string c_s, c_u = "0";
  unsigned c_order = 12;
  auto *cohft = app.add_subcommand("cohft", "Potentials of a rank one theory and the genus one equation");
  cohft->add_option("--s", c_s, "s coordinates, e.g. 1=1/2,2=0");
  cohft->add_option("--u", c_u, "u coordinate");
  cohft->add_option("--order", c_order, "Order in x")->check(CLI::Range(3u, 64u));
  add_json(cohft);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return UsageError;
  }

  try {
    if (*number) return cmd_number(num, json);
    if (*table) return cmd_table(table_genus, table_bounds, json);
    if (*verify) return cmd_verify(va, json);
    if (*wp) return cmd_wp(wp_genus, wp_n_max, wp_asym, json);
    if (*cohft) return cmd_cohft(c_s, c_u, c_order, json);
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return UsageError;
  } catch (const std::domain_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return UsageError;
  }
  return UsageError;
}
