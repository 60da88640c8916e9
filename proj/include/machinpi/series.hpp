#pragma once

#include <cstdint>

#include "machinpi/mpnum.hpp"

namespace machinpi {

// ---- arctangent -----------------------------------------------------------

// sum_{n<terms} (-1)^n x^(2n+1) / (2n+1).
MPReal arctan_maclaurin(const MPReal& x, int terms);

// Euler's series sum_{n<terms} 2^(2n) (n!)^2/(2n+1)! * x^(2n+1)/(1+x^2)^(n+1),
// each term derived from the previous one.
MPReal arctan_euler(const MPReal& x, int terms);

// g/h coefficients of the single-midpoint EMI expansion.
struct EmiCoeffState {
  MPReal g;
  MPReal h;
  int n = 1;

  // g_1 = 2/x, h_1 = 1.
  static EmiCoeffState start(const MPReal& x);
  // g <- g(1 - 4/x^2) + 4h/x, h <- h(1 - 4/x^2) - 4g/x.
  void advance(const MPReal& one_minus_4_over_x2, const MPReal& four_over_x);
};

// 2 sum_{n=1}^{terms} g_n / ((2n-1)(g_n^2 + h_n^2)).
MPReal arctan_emi1(const MPReal& x, int terms);

// General EMI expansion with `midpoints` sub-intervals (gamma_m = (m - 1/2)/M).
// midpoints == 1 reproduces arctan_emi1.
MPReal arctan_emi(const MPReal& x, int terms, int midpoints);

// Approximate decimal digits gained per EMI term at argument x: log10(1 + 4/x^2).
double emi1_digits_per_term(const MPReal& x);

// arctan to x's precision by sqrt-halving argument reduction followed by
// the Maclaurin series. Independent of the EMI code path; used as the
// reference in convergence reports.
MPReal arctan_reference(const MPReal& x);

// ---- tangent --------------------------------------------------------------

// Sine-series partial sums shared by numerator and denominator of
// tan x = 2 sin^2(x) / sin(2x).
struct TanPQState {
  MPReal x;
  MPReal p;  // p_n = sum_{j<n} r_j
  MPReal q;  // q_n = sum_{j<n} 2^(2j+1) r_j
  MPReal r;  // r_n = (-1)^n x^(2n+1) / (2n+1)!
  int n = 0;

  static TanPQState start(const MPReal& x);
  void advance();
  // 2 p_n^2 / q_n; DomainError when q_n is zero.
  MPReal value() const;
};

// tan x ~ 2 p_terms^2 / q_terms.
MPReal tan_pq(const MPReal& x, int terms);

// Smallest truncation order whose first omitted sin(2x) term is below
// 10^-digits for |x| <= x_abs.
int tan_pq_terms_for(double x_abs, int digits);

// Newton-Raphson s <- s - (1 + s^2)(arctan(s) - x) from s_1 = x, with an
// internal EMI arctangent accurate to x's precision. Requires |x| < pi/2.
MPReal tan_newton(const MPReal& x, int iterations);

// ---- exact tangent identities -------------------------------------------

// tan(2^doublings * arctan(x)) via lambda <- 2 lambda / (1 - lambda^2).
// DomainError naming the doubling index if lambda hits +-1.
BigRational tan_pow2_multiple(const BigRational& x, int doublings);

// tan(n * arctan(x)) = 2i(1 - ix)^n / ((1 - ix)^n + (1 + ix)^n) - i, exactly.
// Refuses (DomainError) when the powers would exceed `digit_budget` digits.
BigRational tan_nx_complex(const BigRational& x, const BigInt& n,
                           std::uint64_t digit_budget = 10'000'000);

// tan(a - b) = (tan a - tan b) / (1 + tan a tan b).
BigRational tan_diff(const BigRational& ta, const BigRational& tb);

}  // namespace machinpi
