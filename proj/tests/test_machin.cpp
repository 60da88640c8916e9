#include <doctest.h>

#include <filesystem>

#include "fixtures.hpp"
#include "machinpi/machin.hpp"
#include "machinpi/series.hpp"
#include "machinpi/validate.hpp"

using namespace machinpi;

namespace {

MPReal atan_of(const BigRational& x, int p) { return arctan_reference(MPReal::from_rational(x, p)); }

}  // namespace

TEST_CASE("b1k_two_step fixtures") {
  CHECK(b1k_two_step(BigInt(2), 2) == BigRational(-7));
  CHECK(b1k_two_step(BigInt(5), 3) == BigRational(-239));
  CHECK(b1k_two_step(BigInt(10), 4) == BigRational(BigInt(-147153121), BigInt(1758719)));
}

TEST_CASE("eta_general") {
  CHECK(eta_general(BigRational(28), BigInt(22)) ==
        BigRational(BigInt::parse("98646395734210062276153190241239"), BigInt::parse("1744507482180328366854565127")));
  // phi = 2^(k-1) reproduces the two-step constant
  CHECK(eta_general(BigRational(2), BigInt(2)) == b1k_two_step(BigInt(2), 2));
  CHECK(eta_general(BigRational(5), BigInt(4)) == b1k_two_step(BigInt(5), 3));
  CHECK(eta_general(BigRational(10), BigInt(8)) == b1k_two_step(BigInt(10), 4));
}

TEST_CASE("eta satisfies its defining arctangent identity") {
  // pi/4 = phi arctan(1/gamma) + arctan(1/eta)
  const BigRational eta = eta_general(BigRational(28), BigInt(22));
  const MPReal lhs = atan_of(BigRational(BigInt(1), BigInt(28)), 60) * BigInt(22) + atan_of(eta.reciprocal(), 60);
  const MPReal quarter_pi = atan_of(BigRational(BigInt(1), BigInt(5)), 60) * BigInt(4) -
                            atan_of(BigRational(BigInt(1), BigInt(239)), 60);
  CHECK(agreement_digits(lhs, quarter_pi) >= 55);
}

TEST_CASE("expand_formula small k") {
  const Expansion e2 = expand_formula(2, 0);
  CHECK(e2.formula == fixtures::formula({{2, "2"}, {1, "-7"}}, e2.formula.provenance));
  CHECK(e2.state.terminated);
  const Expansion e3 = expand_formula(3, 0);
  CHECK(e3.formula.terms == fixtures::formula({{4, "5"}, {1, "-239"}}).terms);
  CHECK(e3.state.terminated);
}

TEST_CASE("expand_formula k = 4 gives the seven-term formula") {
  const Expansion e = expand_formula(4, 5);
  CHECK(e.formula.terms == fixtures::seven_term_k4().terms);
  CHECK(e.state.terminated);
  CHECK(e.state.A_k == BigInt(10));
  CHECK(e.state.B_list.back().num().to_string().size() == 85);
  CHECK(e.state.B_list.back().num().abs().decimal_digits() == 84);
  CHECK(check_product_relation(e.formula).is_valid);
}

TEST_CASE("truncated expansions still hold exactly") {
  // the last term keeps the rational remainder
  for (int m = 0; m <= 3; ++m) {
    const Expansion e = expand_formula(4, m);
    CHECK_FALSE(e.state.terminated);
    CHECK(e.formula.terms.size() == static_cast<std::size_t>(m + 2));
    CHECK_FALSE(e.formula.terms.back().beta.is_integer());
    CHECK(check_product_relation(e.formula).is_valid);
  }
  for (int k = 5; k <= 7; ++k) CHECK(check_product_relation(expand_formula(k, 2).formula).is_valid);
}

TEST_CASE("leading_formula") {
  const MachinFormula f = leading_formula(27, 1);
  REQUIRE(f.terms.size() == 1);
  CHECK(f.terms[0].coeff == BigInt::pow2(26));
  CHECK(f.terms[0].beta == BigRational(85445659));
  const MachinFormula g = leading_formula(4, 2);
  CHECK(g.terms[0].beta == BigRational(10));
  CHECK(g.terms[1].beta == BigRational(-84));
}

TEST_CASE("split_arctan") {
  const ArctanSplit a = split_arctan(BigRational(BigInt(7), BigInt(2)));
  CHECK(a.floor == BigInt(3));
  CHECK(a.residual == BigRational(BigInt(-1), BigInt(23)));
  const MPReal lhs = atan_of(BigRational(BigInt(2), BigInt(7)), 45);
  const MPReal rhs = atan_of(BigRational(BigInt(1), BigInt(3)), 45) + atan_of(a.residual, 45);
  CHECK(agreement_digits(rhs, lhs) >= 40);

  const ArctanSplit b = split_arctan(BigRational(5));
  CHECK(b.floor == BigInt(5));
  CHECK(b.residual.is_zero());

  const ArctanSplit c = split_arctan(BigRational(BigInt(-3), BigInt(2)));
  CHECK(c.floor == BigInt(-2));
  CHECK(c.residual == BigRational(BigInt(-1), BigInt(8)));
  const MPReal lhs2 = atan_of(BigRational(BigInt(-2), BigInt(3)), 45);
  const MPReal rhs2 = atan_of(BigRational(BigInt(-1), BigInt(2)), 45) + atan_of(c.residual, 45);
  CHECK(agreement_digits(rhs2, lhs2) >= 40);

  CHECK_THROWS_AS(split_arctan(BigRational(BigInt(1), BigInt(2))), DomainError);
  CHECK_THROWS_AS(split_arctan(BigRational(0)), DomainError);
}

TEST_CASE("split_term keeps the product relation") {
  MachinFormula f = expand_formula(4, 1).formula;
  const ArctanTerm last = f.terms.back();
  f.terms.pop_back();
  for (const ArctanTerm& t : split_term(last)) f.terms.push_back(t);
  CHECK(f.terms.size() == 4);
  CHECK(check_product_relation(f).is_valid);
  CHECK(split_term({BigInt(1), BigRational(239)}).size() == 1);
}

TEST_CASE("formula JSON round trip") {
  const MachinFormula f = expand_formula(4, 5).formula;
  CHECK(formula_from_json(formula_to_json(f)) == f);
  const MachinFormula g = expand_formula(5, 2).formula;
  CHECK(formula_from_json(formula_to_json(g)) == g);

  const auto path = std::filesystem::temp_directory_path() / "machinpi_roundtrip.json";
  write_formula(path, f);
  CHECK(read_formula(path) == f);
  std::filesystem::remove(path);

  CHECK_THROWS_AS(formula_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(formula_from_json(R"({"terms":[{"coeff":"1"}]})"), std::invalid_argument);
  CHECK_THROWS_AS(formula_from_json(R"({"terms":[{"coeff":"x","beta_num":"2","beta_den":"1"}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(formula_from_json(R"({"terms":[{"coeff":"1","beta_num":"2","beta_den":"0"}]})"),
                  std::invalid_argument);
}

TEST_CASE("describe") {
  CHECK(describe(fixtures::machin()) == "pi/4 = 4 arctan(1/5) - arctan(1/239)");
}
