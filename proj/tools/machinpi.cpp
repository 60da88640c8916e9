// machinpi: Machin-like formulas, arctangent series and the reduced-argument
// pi iteration from the command line.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "machinpi/machin.hpp"
#include "machinpi/pi_iter.hpp"

#include "machinpi/series.hpp"
#include "machinpi/validate.hpp"

using namespace machinpi;

namespace {

std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
}

// Round half up to `decimals` places (non-negative values).
std::string rounded(const MPReal& v, int decimals) {
  const MPReal half = MPReal::from_rational(BigRational(BigInt(1), BigInt::pow10(decimals) * BigInt(2)),
                                            v.precision());
  return (v + half).to_fixed(decimals);
}

AlphaMode parse_alpha_mode(const std::string& s) {
  if (s == "exact") return AlphaMode::exact;
  if (s == "numeric") return AlphaMode::numeric;
  return AlphaMode::automatic;
}

// Formula whose first `terms` terms are usable at order k.
MachinFormula formula_for(int k, int terms, const std::string& file) {
  if (!file.empty()) return read_formula(file);
  if (terms > 1 && k > 12)
    throw DomainError("B_{1," + std::to_string(k) + "} is too large to expand here; pass --formula");
  return leading_formula(k, terms);
}

struct Options {
  int k = 4;
  int terms = 1;
  int max_m = 5;
  int max_n = 0;
  int seed_digits = 0;
  int precision = 0;
  int rounds = 8;
  int rate = 0;
  int base = 0;
  int emi_m = 2;
  std::string seed_file;
  std::string formula_file;
  std::string arg = "1/5";
  std::string method = "emi1";
  std::string alpha_mode = "auto";
  std::string report = "table";
  std::string out;
  std::string input;
};

int machin_expand(const Options& o) {
  const Expansion e = expand_formula(o.k, o.max_m);
  if (!o.out.empty()) write_formula(o.out, e.formula);
  if (o.report == "json")
    std::cout << formula_to_json(e.formula) << '\n';
  else
    std::cout << describe(e.formula) << '\n';
  return 0;
}

int machin_validate(const Options& o) {
  const ValidationReport r = check_product_relation(read_formula(o.input));
  if (o.report == "json") {
    nlohmann::json j;
    j["valid"] = r.is_valid;
    j["product_re"] = r.product.re.to_string();
    j["product_im"] = r.product.im.to_string();
    std::cout << j.dump() << '\n';
  } else {
    std::cout << (r.is_valid ? "valid" : "invalid") << '\n';
  }
  return r.is_valid ? 0 : 1;
}

int machin_lehmer(const Options& o) {
  const MachinFormula f = read_formula(o.input);
  std::cout << rounded(lehmer_measure(f, 15), 6);
  if (!check_product_relation(f, 15).has_rational_beta)
    std::cout << '\n';
  else
    std::cout << " (rational beta)\n";
  return 0;
}

int series_report(const Options& o) {
  const int p = o.precision > 0 ? o.precision : 500;
  const int max_n = o.max_n > 0 ? o.max_n : 15;
  const MPReal x = MPReal::from_rational(BigRational::parse(o.arg), p);
  const MPReal ref = arctan_reference(x.with_precision(p + 10));
  nlohmann::json rows = nlohmann::json::array();
  for (int n = 1; n <= max_n; ++n) {
    MPReal v;
    if (o.method == "maclaurin")
      v = arctan_maclaurin(x, n);
    else if (o.method == "euler")
      v = arctan_euler(x, n);
    else if (o.method == "emi")
      v = arctan_emi(x, n, o.emi_m);
    else
      v = arctan_emi1(x, n);
    rows.push_back({n, agreement_digits(v, ref)});
  }
  if (o.report == "json") {
    std::cout << nlohmann::json{{"method", o.method}, {"arg", o.arg}, {"rows", rows}}.dump() << '\n';
    return 0;
  }
  std::cout << "Increment of n | Correct digits\n---------------------------------\n";
  for (const auto& r : rows) {
    std::string n = std::to_string(r[0].get<int>());
    n.resize(std::max<std::size_t>(n.size(), 15), ' ');
    std::cout << n << "| " << r[1].get<int>() << '\n';
  }
  return 0;
}

void print_trace(const Options& o, const IterationTrace& t) {
  if (o.report == "json")
    std::cout << trace_to_json(t) << '\n';
  else
    std::cout << trace_to_table(t);
}

int pi_iterate(const Options& o) {
  IterationConfig cfg = IterationConfig::preset(o.k, o.terms).value_or(IterationConfig{});
  cfg.k = o.k;
  cfg.leading_terms = o.terms;
  if (o.max_n > 0) cfg.max_n = o.max_n;
  if (o.rate > 0) cfg.rate_estimate = o.rate;
  if (o.base > 0) cfg.base_precision = o.base;
  cfg.alpha_mode = parse_alpha_mode(o.alpha_mode);

  MPReal seed;
  if (!o.seed_file.empty()) {
    std::string text = read_text(o.seed_file);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    seed = MPReal::parse(text);
    cfg.seed_digits = seed.precision();
  } else {
    if (o.seed_digits > 0) cfg.seed_digits = o.seed_digits;
    seed = truncated_seed(cfg.seed_digits);
  }
  const IterationResult r = iterate_modified(cfg, formula_for(o.k, o.terms, o.formula_file), seed);
  print_trace(o, r.trace);
  if (!o.out.empty()) write_text(o.out, r.pi.to_string() + '\n');
  return 0;
}

int pi_basic(const Options& o) {
  const IterationResult r = iterate_basic(o.k, o.rounds, o.precision > 0 ? o.precision : 200);
  print_trace(o, r.trace);
  if (!o.out.empty()) write_text(o.out, r.pi.to_string() + '\n');
  return 0;
}

int pi_rational_step(const Options& o) {
  const MachinFormula f = formula_for(o.k, o.terms, o.formula_file);
  const RationalStep r = rational_single_step(o.k, f, o.terms, o.precision > 0 ? o.precision : 100);
  if (o.report == "json") {
    nlohmann::json j;
    j["before"] = r.before;
    j["after"] = r.after;
    j["tangent"] = r.tangent.to_string();
    j["sigma2"] = r.sigma2.to_string();
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << "tan = " << r.tangent.to_string() << '\n'
            << r.before << " digits of π before iteration\n"
            << r.after << " digits of π after iteration\n";
  return 0;
}

int bootstrap(const Options& o) {
  const int d = o.precision > 0 ? o.precision : 100;
  const MPReal pi = bootstrap_pi(d + 2);
  if (o.report == "json")
    std::cout << nlohmann::json{{"digits", d}, {"pi", pi.to_fixed(d)}}.dump() << '\n';
  else
    std::cout << pi.to_fixed(d) << '\n';
  if (!o.out.empty()) write_text(o.out, pi.to_string() + '\n');
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Machin-like formulas and the reduced-argument pi iteration"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> reports{"table", "json"};

  auto report = [&](CLI::App* s) {
    s->add_option("--report", o.report, "table or json")->check(CLI::IsMember(reports));
  };

  auto* expand = app.add_subcommand("machin-expand", "Generate the k-th Machin-like formula");
  expand->add_option("--k", o.k, "Nested radical order")->check(CLI::Range(2, 64));
  expand->add_option("--max-m", o.max_m, "Number of floor terms after the leading term")->check(CLI::Range(0, 64));
  expand->add_option("--out", o.out, "Write the formula JSON here");
  report(expand);

  auto* validate = app.add_subcommand("machin-validate", "Check the Gaussian product relation of a formula file");
  validate->add_option("formula", o.input, "Formula JSON")->required()->check(CLI::ExistingFile);
  report(validate);

  auto* lehmer = app.add_subcommand("machin-lehmer", "Lehmer measure of a formula file");
  lehmer->add_option("formula", o.input, "Formula JSON")->required()->check(CLI::ExistingFile);

  auto* series = app.add_subcommand("series-report", "Correct digits of an arctangent series per term count");
  series->add_option("--arctan-arg", o.arg, "Argument as p/q");
  series->add_option("--method", o.method, "Series")
      ->check(CLI::IsMember(std::vector<std::string>{"maclaurin", "euler", "emi1", "emi"}));
  series->add_option("--emi-m", o.emi_m, "Midpoints for --method emi")->check(CLI::Range(1, 64));
  series->add_option("--max-n", o.max_n, "Largest term count (default 15)")->check(CLI::Range(1, 100000));
  series->add_option("--precision", o.precision, "Working digits (default 500)")->check(CLI::Range(10, 1000000));
  report(series);

  auto* iterate = app.add_subcommand("pi-iterate", "Reduced-argument iteration from a known pi prefix");
  iterate->add_option("--k", o.k)->check(CLI::Range(1, 64));
  iterate->add_option("--terms", o.terms, "Leading Machin terms folded into c")->check(CLI::Range(1, 64));
  auto* seed_digits =
      iterate->add_option("--seed-digits", o.seed_digits, "Seed with floor(pi 10^d)/10^d")->check(CLI::Range(1, 100000));
  iterate->add_option("--seed-file", o.seed_file, "Seed with a previous --out file")
      ->check(CLI::ExistingFile)
      ->excludes(seed_digits);
  iterate->add_option("--formula", o.formula_file, "Formula JSON instead of the generated one")
      ->check(CLI::ExistingFile);
  iterate->add_option("--max-n", o.max_n, "Largest tangent truncation order")->check(CLI::Range(1, 100000));
  iterate->add_option("--rate", o.rate, "Precision growth per increment")->check(CLI::Range(1, 100000));
  iterate->add_option("--base", o.base, "Base precision")->check(CLI::Range(1, 100000));
  iterate->add_option("--alpha-mode", o.alpha_mode)
      ->check(CLI::IsMember(std::vector<std::string>{"exact", "numeric", "auto"}));
  iterate->add_option("--out", o.out, "Write the final approximation here");
  report(iterate);

  auto* basic = app.add_subcommand("pi-basic", "Plain quadratic iteration without argument reduction");
  basic->add_option("--k", o.k)->check(CLI::Range(1, 64));
  basic->add_option("--rounds", o.rounds)->check(CLI::Range(1, 64));
  basic->add_option("--precision", o.precision, "Working digits (default 200)")->check(CLI::Range(10, 1000000));
  basic->add_option("--out", o.out);
  report(basic);

  auto* rational = app.add_subcommand("pi-rational-step", "One update with the exact rational tangent");
  rational->add_option("--k", o.k)->check(CLI::Range(1, 64));
  rational->add_option("--terms", o.terms)->check(CLI::Range(1, 64));
  rational->add_option("--precision", o.precision, "Working digits (default 100)")->check(CLI::Range(10, 1000000));
  rational->add_option("--formula", o.formula_file)->check(CLI::ExistingFile);
  report(rational);

  auto* boot = app.add_subcommand("bootstrap", "Print pi from the seven-term k = 4 formula");
  boot->add_option("--precision,--digits", o.precision, "Decimal places (default 100)")->check(CLI::Range(10, 1000000));
  boot->add_option("--out", o.out);
  report(boot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  try {
    if (sub == expand) return machin_expand(o);
    if (sub == validate) return machin_validate(o);
    if (sub == lehmer) return machin_lehmer(o);
    if (sub == series) return series_report(o);
    if (sub == iterate) return pi_iterate(o);
    if (sub == basic) return pi_basic(o);
    if (sub == rational) return pi_rational_step(o);
    return bootstrap(o);
  } catch (const std::exception& e) {
    std::cerr << "machinpi " << sub->get_name() << ": " << e.what() << '\n';
    return 1;
  }
}
