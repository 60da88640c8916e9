#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include "machinpi/bigint.hpp"
#include "machinpi/rational.hpp"

namespace machinpi {

// Decimal floating value mantissa * 10^exponent10 carrying a precision tag
// (significant decimal digits). Every operation truncates toward zero to the
// result precision, so a result is within one unit of its last retained
// digit. Binary operations take the smaller operand precision.
class MPReal {
 public:
  MPReal() = default;

  static MPReal from_int(const BigInt& v, int precision);
  static MPReal from_rational(const BigRational& v, int precision);
  // Truncates the mantissa to `precision` digits.
  static MPReal from_parts(BigInt mantissa, std::int64_t exponent10, int precision);
  // Plain decimal literal: "-12.5", "3.1415", "1e-5", "2.5E3".
  static MPReal parse_decimal(std::string_view text, int precision);
  // Inverse of to_string(): "<mantissa>e<exponent10>@<precision>".
  static MPReal parse(std::string_view text);

  std::string to_string() const;
  // Fixed notation truncated to `decimals` places after the point.
  std::string to_fixed(int decimals) const;

  int precision() const { return precision_; }
  const BigInt& mantissa() const { return mantissa_; }
  std::int64_t exponent10() const { return exponent_; }
  int sign() const { return mantissa_.sign(); }
  bool is_zero() const { return mantissa_.is_zero(); }

  // floor(log10|x|); x must be nonzero.
  std::int64_t magnitude() const;
  // Exponent of one unit in the last place at this precision.
  std::int64_t ulp_exponent() const { return magnitude() - precision_ + 1; }

  // Raising the precision only re-tags (the value is exact); lowering truncates.
  MPReal with_precision(int precision) const;
  MPReal abs() const { return sign() < 0 ? -*this : *this; }
  double to_double() const;

  MPReal operator-() const { return MPReal(-mantissa_, exponent_, precision_); }
  friend MPReal operator+(const MPReal& a, const MPReal& b);
  friend MPReal operator-(const MPReal& a, const MPReal& b) { return a + (-b); }
  friend MPReal operator*(const MPReal& a, const MPReal& b);
  // DomainError when b is zero.
  friend MPReal operator/(const MPReal& a, const MPReal& b);

  // Integer operands are exact and never lower the precision of `a`.
  friend MPReal operator+(const MPReal& a, const BigInt& b);
  friend MPReal operator-(const MPReal& a, const BigInt& b) { return a + (-b); }
  friend MPReal operator*(const MPReal& a, const BigInt& b);
  friend MPReal operator/(const MPReal& a, const BigInt& b);

  // Value comparison; precision tags are ignored.
  friend bool operator==(const MPReal& a, const MPReal& b) { return compare(a, b) == 0; }
  friend std::strong_ordering operator<=>(const MPReal& a, const MPReal& b) {
    int c = compare(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  MPReal(BigInt m, std::int64_t e, int p) : mantissa_(std::move(m)), exponent_(e), precision_(p) {}
  static int compare(const MPReal& a, const MPReal& b);

  BigInt mantissa_{};
  std::int64_t exponent_ = 0;
  int precision_ = 1;
};

std::ostream& operator<<(std::ostream& os, const MPReal& v);

// x * f exactly; the precision tag widens to hold every digit.
MPReal times_exact(const MPReal& x, const BigInt& f);

// floor(a * 10^decimals) / 10^decimals, keeping a's precision tag.
MPReal truncate_decimals(const MPReal& a, int decimals);

// Newton iteration on r^2 - a with doubling accuracy; DomainError for a < 0.
MPReal sqrt(const MPReal& a);

// Natural and decimal logarithms at a's precision; DomainError for a <= 0.
MPReal ln(const MPReal& a);
MPReal log10(const MPReal& a);

// Greatest integer <= a. Throws FloorAmbiguity (asking for twice the
// precision) when a is within 10 ulp of an integer.
BigInt floor_to_int(const MPReal& a);

// Re-evaluates at doubled precision until the floor is unambiguous.
BigInt floor_to_int(const std::function<MPReal(int)>& evaluate, int start_precision,
                    int max_precision = 1 << 22);

// Number of correct digits of `a` measured against `ref`: |e| where
// ref - a = m * 10^e with 0.1 <= |m| < 1. Returns ref's precision when the
// two agree exactly.
int agreement_digits(const MPReal& a, const MPReal& ref);

}  // namespace machinpi
