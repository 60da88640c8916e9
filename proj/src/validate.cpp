#include "machinpi/validate.hpp"

namespace machinpi {

ValidationReport check_product_relation(const MachinFormula& f, int lehmer_precision) {
  ValidationReport report;
  GaussianRational product(BigRational(1));
  for (const auto& t : f.terms) {
    product = product * gauss_pow(GaussianRational(t.beta, BigRational(1)), t.coeff);
    if (!t.beta.is_integer()) report.has_rational_beta = true;
  }
  report.is_valid = product.re == product.im;
  report.product = std::move(product);
  try {
    report.lehmer = lehmer_measure(f, lehmer_precision);
  } catch (const DomainError&) {
    report.lehmer.reset();
  }
  return report;
}

namespace {

// log10|x| of a rational as log10|num| - log10 den.
MPReal log10_abs(const BigRational& x, int w) {
  auto log10_int = [w](const BigInt& n) {
    return log10(MPReal::from_int(n.abs(), w));
  };
  MPReal r = log10_int(x.num());
  if (!x.is_integer()) r = r - log10_int(x.den());
  return r;
}

}  // namespace

MPReal lehmer_measure(const MachinFormula& f, int precision) {
  const int w = precision + 5;
  MPReal sum = MPReal::from_int(BigInt(0), w);
  for (const auto& t : f.terms) {
    if (t.beta.abs() <= BigRational(1)) {
      throw DomainError("lehmer_measure: |beta| = " + t.beta.abs().to_string() + " is not greater than 1");
    }
    sum = sum + MPReal::from_int(BigInt(1), w) / log10_abs(t.beta, w);
  }
  return sum.with_precision(precision);
}

}  // namespace machinpi
