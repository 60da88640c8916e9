#include "machinpi/series.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace machinpi {

namespace {

// Internal working precision: a handful of guard digits plus log10 of the
// number of accumulated roundings.
int guarded(int precision, int terms) {
  return precision + 6 + static_cast<int>(std::ceil(std::log10(terms + 1.0)));
}

MPReal one(int p) { return MPReal::from_int(BigInt(1), p); }

// log10|x| for nonzero x, as a double.
double log10_abs(const MPReal& x) {
  const MPReal head = x.with_precision(std::min(x.precision(), 17));
  return std::log10(std::fabs(head.mantissa().to_double())) + static_cast<double>(head.exponent10());
}

void require_terms(int terms, const char* op) {
  if (terms < 1) throw DomainError(std::string(op) + ": number of terms must be at least 1");
}

}  // namespace

MPReal arctan_maclaurin(const MPReal& x, int terms) {
  require_terms(terms, "arctan_maclaurin");
  const int p = x.precision();
  if (x.is_zero()) return MPReal::from_int(BigInt(0), p);
  const int w = guarded(p, terms);
  const MPReal xw = x.with_precision(w);
  const MPReal x2 = xw * xw;
  MPReal power = xw;
  MPReal sum = xw;
  for (int n = 1; n < terms; ++n) {
    power = -(power * x2);
    if (power.is_zero()) break;
    sum = sum + power / BigInt(2 * n + 1);
  }
  return sum.with_precision(p);
}

MPReal arctan_euler(const MPReal& x, int terms) {
  require_terms(terms, "arctan_euler");
  const int p = x.precision();
  if (x.is_zero()) return MPReal::from_int(BigInt(0), p);
  const int w = guarded(p, terms);
  const MPReal xw = x.with_precision(w);
  const MPReal x2 = xw * xw;
  const MPReal denom = one(w) + x2;
  const MPReal ratio = x2 / denom;
  MPReal term = xw / denom;
  MPReal sum = term;
  for (int n = 1; n < terms; ++n) {
    // c_n / c_{n-1} = 2n / (2n + 1)
    term = term * ratio * BigInt(2 * n) / BigInt(2 * n + 1);
    if (term.is_zero()) break;
    sum = sum + term;
  }
  return sum.with_precision(p);
}

EmiCoeffState EmiCoeffState::start(const MPReal& x) {
  const int p = x.precision();
  return {MPReal::from_int(BigInt(2), p) / x, one(p), 1};
}

void EmiCoeffState::advance(const MPReal& one_minus_4_over_x2, const MPReal& four_over_x) {
  MPReal g_next = g * one_minus_4_over_x2 + h * four_over_x;
  h = h * one_minus_4_over_x2 - g * four_over_x;
  g = std::move(g_next);
  ++n;
}

MPReal arctan_emi1(const MPReal& x, int terms) {
  require_terms(terms, "arctan_emi1");
  const int p = x.precision();
  if (x.is_zero()) return MPReal::from_int(BigInt(0), p);
  const int w = guarded(p, terms);
  const MPReal xw = x.with_precision(w);
  const MPReal four_over_x = MPReal::from_int(BigInt(4), w) / xw;
  const MPReal a = one(w) - four_over_x / xw;
  EmiCoeffState st = EmiCoeffState::start(xw);
  MPReal sum = MPReal::from_int(BigInt(0), w);
  for (int n = 1; n <= terms; ++n) {
    sum = sum + st.g / ((st.g * st.g + st.h * st.h) * BigInt(2 * n - 1));
    if (n < terms) st.advance(a, four_over_x);
  }
  return (sum * BigInt(2)).with_precision(p);
}

MPReal arctan_emi(const MPReal& x, int terms, int midpoints) {
  require_terms(terms, "arctan_emi");
  if (midpoints < 1) throw DomainError("arctan_emi: midpoints must be at least 1");
  const int p = x.precision();
  if (x.is_zero()) return MPReal::from_int(BigInt(0), p);
  const int w = guarded(p, terms * midpoints);
  const MPReal xw = x.with_precision(w);
  MPReal sum = MPReal::from_int(BigInt(0), w);
  for (int m = 1; m <= midpoints; ++m) {
    // x * gamma_{m,M} with gamma = (2m - 1) / (2M)
    const MPReal xt = xw * BigInt(2 * m - 1) / BigInt(2 * midpoints);
    const MPReal inv = one(w) / xt;
    const MPReal a = one(w) - inv * inv;
    const MPReal b = inv * BigInt(2);
    MPReal kappa = inv;
    MPReal lambda = one(w);
    const BigInt odd(2 * m - 1);
    const BigInt odd2 = odd * odd;
    BigInt weight = odd;  // (2m - 1)^(2n - 1)
    for (int n = 1; n <= terms; ++n) {
      sum = sum + kappa / ((kappa * kappa + lambda * lambda) * (BigInt(2 * n - 1) * weight));
      if (n == terms) break;
      MPReal k_next = kappa * a + lambda * b;
      lambda = lambda * a - kappa * b;
      kappa = std::move(k_next);
      weight *= odd2;
    }
  }
  return (sum * BigInt(2)).with_precision(p);
}

double emi1_digits_per_term(const MPReal& x) {
  if (x.is_zero()) return std::numeric_limits<double>::infinity();
  const double minus_two_log = -2.0 * log10_abs(x);
  if (minus_two_log > 30.0) return std::log10(4.0) + minus_two_log;
  return std::log10(1.0 + 4.0 * std::pow(10.0, minus_two_log));
}

MPReal arctan_reference(const MPReal& x) {
  const int p = x.precision();
  if (x.is_zero()) return MPReal::from_int(BigInt(0), p);
  const int w = p + 12;
  const MPReal limit = MPReal::parse_decimal("0.1", w);
  MPReal y = x.with_precision(w);
  int halvings = 0;
  // arctan y = 2 arctan(y / (1 + sqrt(1 + y^2)))
  while (y.abs() > limit) {
    y = y / (one(w) + sqrt(one(w) + y * y));
    ++halvings;
  }
  const double per_term = -2.0 * log10_abs(y);
  const int terms = static_cast<int>(std::ceil((w + 2) / per_term)) + 1;
  return (arctan_maclaurin(y, terms) * BigInt::pow2(static_cast<std::uint64_t>(halvings))).with_precision(p);
}

TanPQState TanPQState::start(const MPReal& x) {
  const int p = x.precision();
  return {x, MPReal::from_int(BigInt(0), p), MPReal::from_int(BigInt(0), p), x, 0};
}

void TanPQState::advance() {
  // p_{n+1} = p_n + r_n, q_{n+1} = q_n + 2^(2n+1) r_n
  p = p + r;
  q = q + r * BigInt::pow2(static_cast<std::uint64_t>(2 * n + 1));
  r = -(r * x * x) / BigInt((2 * n + 2) * static_cast<long>(2 * n + 3));
  ++n;
}

MPReal TanPQState::value() const {
  if (q.is_zero()) throw DomainError("tan_pq: denominator q_n vanished at working precision");
  return (p * p * BigInt(2)) / q;
}

MPReal tan_pq(const MPReal& x, int terms) {
  require_terms(terms, "tan_pq");
  const int p = x.precision();
  if (x.is_zero()) return MPReal::from_int(BigInt(0), p);
  TanPQState st = TanPQState::start(x.with_precision(guarded(p, terms)));
  for (int n = 0; n < terms; ++n) st.advance();
  return st.value().with_precision(p);
}

int tan_pq_terms_for(double x_abs, int digits) {
  if (x_abs <= 0.0) return 1;
  // q_n is the sin(2x) partial sum, so its tail dominates.
  const double lx = std::log10(2.0 * x_abs);
  for (int n = 1;; ++n) {
    // log10 of |2x|^(2n+1) / (2n+1)!
    const double l = (2 * n + 1) * lx - std::lgamma(2.0 * n + 2.0) / std::log(10.0);
    if (l < -digits) return n;
  }
}

namespace {

// arctan via sqrt halving down to |y| <= 1/4 then EMI with enough terms.
MPReal arctan_for_newton(const MPReal& s) {
  const int p = s.precision();
  if (s.is_zero()) return s;
  const MPReal limit = MPReal::parse_decimal("0.25", p);
  MPReal y = s;
  int halvings = 0;
  while (y.abs() > limit) {
    y = y / (one(p) + sqrt(one(p) + y * y));
    ++halvings;
  }
  const int terms = static_cast<int>(std::ceil((p + 4) / emi1_digits_per_term(y))) + 2;
  return arctan_emi1(y, terms) * BigInt::pow2(static_cast<std::uint64_t>(halvings));
}

}  // namespace

MPReal tan_newton(const MPReal& x, int iterations) {
  if (iterations < 1) throw DomainError("tan_newton: iterations must be at least 1");
  const int p = x.precision();
  if (x.is_zero()) return MPReal::from_int(BigInt(0), p);
  const double xd = std::fabs(x.to_double());
  if (xd >= 1.5707963267948966) throw DomainError("tan_newton: |x| must be below pi/2");
  const double bound = 10.0 * std::max(1.0, std::tan(xd));
  const int w = p + 8;
  const MPReal xw = x.with_precision(w);
  MPReal s = xw;
  for (int i = 0; i < iterations; ++i) {
    s = s - (one(w) + s * s) * (arctan_for_newton(s) - xw);
    if (std::fabs(s.to_double()) > bound) {
      throw NumericError("tan_newton: iteration diverged at step " + std::to_string(i + 1));
    }
  }
  return s.with_precision(p);
}

BigRational tan_pow2_multiple(const BigRational& x, int doublings) {
  if (doublings < 0) throw DomainError("tan_pow2_multiple: doublings must be non-negative");
  BigRational lambda = x;
  for (int j = 1; j <= doublings; ++j) {
    const BigRational sq = lambda * lambda;
    if (sq == BigRational(1)) {
      throw DomainError("tan_pow2_multiple: pole at doubling " + std::to_string(j) + " (lambda = " +
                        lambda.to_string() + ")");
    }
    lambda = BigRational(2) * lambda / (BigRational(1) - sq);
  }
  return lambda;
}

BigRational tan_nx_complex(const BigRational& x, const BigInt& n, std::uint64_t digit_budget) {
  // (1 - ix)^n = (den - i num)^n / den^n: about |n| * log10|den - i num| digits.
  const double part_digits =
      static_cast<double>(std::max(x.num().abs(), x.den()).decimal_digits()) + 0.5;
  const double estimate = std::fabs(n.to_double()) * part_digits;
  if (estimate > static_cast<double>(digit_budget)) {
    throw DomainError("tan_nx_complex: exponent " + n.to_string() + " needs about " +
                      std::to_string(static_cast<long long>(estimate)) + " digits, over the budget of " +
                      std::to_string(digit_budget));
  }
  const GaussianRational i(BigRational(0), BigRational(1));
  const GaussianRational minus = gauss_pow(GaussianRational(BigRational(1), -x), n);
  const GaussianRational plus = gauss_pow(GaussianRational(BigRational(1), x), n);
  const GaussianRational denom = minus + plus;
  if (denom.is_zero()) throw DomainError("tan_nx_complex: zero denominator (pole)");
  const GaussianRational t = GaussianRational(BigRational(0), BigRational(2)) * minus / denom - i;
  if (!t.im.is_zero()) throw NumericError("tan_nx_complex: nonzero imaginary residue " + t.im.to_string());
  return t.re;
}

BigRational tan_diff(const BigRational& ta, const BigRational& tb) {
  const BigRational denom = BigRational(1) + ta * tb;
  if (denom.is_zero()) throw DomainError("tan_diff: 1 + tan(a) tan(b) = 0");
  return (ta - tb) / denom;
}

}  // namespace machinpi
