// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failures.

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "machinpi/machin.hpp"
#include "machinpi/pi_iter.hpp"
#include "machinpi/radicals.hpp"
#include "machinpi/series.hpp"
#include "machinpi/validate.hpp"

using namespace machinpi;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

using Check = std::function<void(Outcome&)>;

std::string rational(const char* num, const char* den) {
  return BigRational(BigInt::parse(num), BigInt::parse(den)).to_string();
}

void generation(Outcome& o) {
  o.expect(compute_Ak(2) == BigInt(2), "A_2");
  o.expect(compute_Ak(3) == BigInt(5), "A_3");
  o.expect(compute_Ak(4) == BigInt(10), "A_4");
  o.expect(compute_Ak(27) == BigInt(85445659), "A_27");
  o.expect(b1k_two_step(BigInt(2), 2) == BigRational(-7), "B_1,2");
  o.expect(b1k_two_step(BigInt(5), 3) == BigRational(-239), "B_1,3");
  o.expect(b1k_two_step(BigInt(10), 4).to_string() == "-147153121/1758719", "B_1,4");
  o.detail << " A = 2 5 10 85445659; B_1,4 = " << b1k_two_step(BigInt(10), 4).to_string();
}

void seven_term(Outcome& o) {
  const Expansion e = expand_formula(4, 5);
  o.expect(e.formula.terms == fixtures::seven_term_k4().terms, "betas");
  const std::string b6 = e.formula.terms.back().beta.to_string();
  o.expect(b6.size() >= 6 && b6.substr(b6.size() - 6) == "792397", "B_6,4 suffix");
  o.expect(e.formula.terms.back().beta.num().abs().decimal_digits() == 84, "B_6,4 length");
  o.expect(check_product_relation(e.formula).is_valid, "product relation");
  o.detail << " B_6,4 = ..." << b6.substr(b6.size() - 12) << ", valid";
}

void eta(Outcome& o) {
  const BigRational v = eta_general(BigRational(28), BigInt(22));
  o.expect(v.to_string() == rational("98646395734210062276153190241239", "1744507482180328366854565127"), "eta");
  o.detail << " " << v.to_string();
}

void lehmer(Outcome& o) {
  struct Row {
    const char* name;
    MachinFormula f;
    double want;
    double tol;
  };
  const std::vector<Row> rows{{"Machin", fixtures::machin(), 1.85113, 1e-5},
                              {"Gauss", fixtures::gauss(), 1.78661, 1e-5},
                              {"Stormer", fixtures::stormer(), 1.58604, 1e-5},
                              {"Takano", fixtures::takano(), 1.7799, 1e-5},
                              {"seven-term A", fixtures::seven_term_a(), 1.34085, 1e-5},
                              {"seven-term B", fixtures::seven_term_b(), 1.39524, 1e-5},
                              {"1/85445659", leading_formula(27, 1), 0.126077, 1e-6}};
  for (const Row& r : rows) {
    const double mu = lehmer_measure(r.f).to_double();
    o.expect(std::abs(mu - r.want) <= r.tol, r.name);
    char buf[48];
    std::snprintf(buf, sizeof buf, " %.6f", mu);
    o.detail << buf;
  }
}

void exact_alpha(Outcome& o) {
  const BigRational a = tan_pow2_multiple(BigRational(BigInt(1), BigInt(10)), 3);
  const BigRational b = tan_diff(a, BigRational(BigInt(1), BigInt(84)));
  o.expect(a.to_string() == "74455920/72697201", "tan(8 arctan(1/10))");
  o.expect(b.to_string() == "6181600079/6181020804", "chain with 1/84");
  o.detail << " " << a.to_string() << ", " << b.to_string();
}

void tables(Outcome& o) {
  const MachinFormula f4 = expand_formula(4, 5).formula;
  const MachinFormula f27 = leading_formula(27, 1);
  struct Run {
    int k, terms, endpoint;
    std::vector<std::pair<int, int>> printed;
  };
  const std::vector<Run> runs{
      {4, 1, 200, {{1, 5}, {2, 9}, {3, 14}, {4, 19}, {5, 25}, {33, 169}, {34, 174}, {35, 179}, {36, 184},
                   {37, 189}, {38, 194}, {39, 199}, {40, 200}, {41, 200}, {42, 200}}},
      {4, 2, 402, {{1, 12}, {2, 21}, {3, 31}, {4, 41}, {5, 51}, {33, 341}, {34, 351}, {35, 361}, {36, 371},
                   {37, 381}, {38, 391}, {39, 401}, {40, 402}, {41, 402}, {42, 402}}},
      {27, 1, 804, {{1, 25}, {2, 42}, {3, 60}, {4, 78}, {5, 96}, {37, 690}, {38, 708}, {39, 726}, {40, 744},
                    {41, 762}, {42, 780}, {43, 798}, {44, 804}, {45, 804}, {46, 804}}}};
  // each run is seeded with the previous run's output
  MPReal seed = truncated_seed(100);
  for (const Run& run : runs) {
    const IterationConfig cfg = *IterationConfig::preset(run.k, run.terms);
    const IterationResult r = iterate_modified(cfg, run.k == 27 ? f27 : f4, seed);
    const std::string tag = "k=" + std::to_string(run.k) + "/" + std::to_string(run.terms);
    int worst = 0;
    for (const auto& [n, want] : run.printed) {
      if (static_cast<std::size_t>(n) > r.trace.rows.size()) {
        o.expect(false, tag + " missing row " + std::to_string(n));
        continue;
      }
      worst = std::max(worst, std::abs(r.trace.rows[n - 1].digits - want));
    }
    o.expect(worst <= 1, tag + " row off by " + std::to_string(worst));
    o.expect(r.trace.after_digits == run.endpoint, tag + " endpoint " + std::to_string(r.trace.after_digits));
    o.detail << " " << r.trace.before_digits << "->" << r.trace.after_digits << " (max row dev " << worst << ")";
    seed = r.pi;
  }
}

void arctan_rate(Outcome& o) {
  const int want[] = {24, 41, 58, 74, 91, 107, 124, 140, 157, 173, 190, 206, 223, 239, 256};
  const MPReal x = MPReal::from_rational(BigRational(BigInt(1), BigInt(85445659)), 500);
  const MPReal ref = arctan_reference(x.with_precision(520));
  int worst = 0;
  for (int n = 1; n <= 15; ++n) worst = std::max(worst, std::abs(agreement_digits(arctan_emi1(x, n), ref) - want[n - 1]));
  o.expect(worst <= 1, "row deviation " + std::to_string(worst));
  o.detail << " 15 rows, max deviation " << worst;
}

void numeric_alpha(Outcome& o) {
  const MPReal a = compute_alpha(27, leading_formula(27, 1), 1, AlphaMode::numeric, 1000).to_real(1000);
  const std::string s = a.to_fixed(20);
  o.expect(s == "1.00000000821844790606", s);
  o.detail << " " << s;
}

void rational_method(Outcome& o) {
  const RationalStep r = rational_single_step(4, expand_formula(4, 5).formula, 4, 100);
  o.expect(r.tangent.to_string() == "26153940164285810690885/26153940164285810690614", "tangent");
  o.expect(r.before == 19 && r.after == 39, "digits");
  o.detail << " " << r.tangent.to_string() << " (" << r.before << ", " << r.after << ")";
}

void properties(Outcome& o) {
  // cross-oracle on 200 points at 40-50 digits
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<int> prec(40, 50);
  std::uniform_real_distribution<double> u(0.01, 0.5);
  int worst = 1000;
  for (int i = 0; i < 200; ++i) {
    const int p = prec(rng);
    const long num = static_cast<long>(u(rng) * 1e9) * (rng() & 1 ? -1 : 1);
    const MPReal x = MPReal::from_rational(BigRational(BigInt(num), BigInt(1000000000)), p);
    const double xd = std::fabs(x.to_double());
    const int nm = static_cast<int>(std::ceil((p + 2) / (-2 * std::log10(xd)))) + 1;
    const int ne = static_cast<int>(std::ceil((p + 2) / -std::log10(xd * xd / (1 + xd * xd)))) + 2;
    const int ni = static_cast<int>(std::ceil((p + 2) / std::log10(1 + 4 / (xd * xd)))) + 2;
    const MPReal ref = arctan_reference(x.with_precision(p + 10));
    for (const MPReal& a : {arctan_maclaurin(x, nm), arctan_euler(x, ne), arctan_emi1(x, ni)})
      worst = std::min(worst, agreement_digits(a, ref) - p);
    const MPReal t1 = tan_pq(x, tan_pq_terms_for(xd, p + 2));
    worst = std::min(worst, agreement_digits(t1, tan_newton(x, 12).with_precision(p + 5)) - p);
  }
  o.expect(worst >= -3, "series agreement margin " + std::to_string(worst));

  // gauss_pow homomorphism
  bool hom = true;
  std::uniform_int_distribution<int> small(-30, 30), expo(-12, 12);
  for (int i = 0; i < 100; ++i) {
    GaussianRational z{BigRational(small(rng)), BigRational(BigInt(small(rng)), BigInt(7))};
    if (z.is_zero()) z.im = BigRational(1);
    const int a = expo(rng), b = expo(rng);
    hom = hom && gauss_pow(z, BigInt(a + b)) == gauss_pow(z, BigInt(a)) * gauss_pow(z, BigInt(b));
  }
  o.expect(hom, "gauss_pow homomorphism");

  // bootstrap against the iteration
  const IterationResult it =
      iterate_modified(*IterationConfig::preset(4, 1), expand_formula(4, 5).formula, truncated_seed(100));
  const int prefix = agreement_digits(it.pi.with_precision(200), bootstrap_pi(200));
  o.expect(prefix >= 199, "bootstrap prefix " + std::to_string(prefix));

  // quadratic shape of the basic iteration
  const IterationResult basic = iterate_basic(4, 9, 200);
  bool shape = true;
  const auto& rows = basic.trace.rows;
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i - 1].digits >= 4 && rows[i].digits < 190)
      shape = shape && rows[i].digits >= 2 * rows[i - 1].digits - 2 && rows[i].digits <= 2 * rows[i - 1].digits + 3;
  o.expect(shape, "quadratic shape");
  o.detail << " series margin " << worst << ", bootstrap prefix " << prefix << ", basic trace";
  for (const TraceRow& r : rows) o.detail << ' ' << r.digits;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Check>> criteria{
      {"generation fixtures", generation},
      {"seven-term formula", seven_term},
      {"eta fixture", eta},
      {"Lehmer measures", lehmer},
      {"exact alpha", exact_alpha},
      {"convergence tables", tables},
      {"arctan rate", arctan_rate},
      {"numeric alpha at k = 27", numeric_alpha},
      {"rational method", rational_method},
      {"property suites", properties},
  };
  int failures = 0;
  int id = 1;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      check(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [threw: " << e.what() << "]";
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << id++ << ". " << name << ":" << o.detail.str() << '\n';
    if (!o.pass) ++failures;
  }
  return failures;
}
