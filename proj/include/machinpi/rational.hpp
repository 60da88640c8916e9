#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "machinpi/bigint.hpp"

namespace machinpi {

// Exact rational, always stored reduced with a positive denominator.
class BigRational {
 public:
  BigRational() : num_(0), den_(1) {}
  BigRational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  BigRational(T n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  BigRational(BigInt num, BigInt den);

  // "p/q" or "p"; both parts arbitrary-size decimal integers.
  static BigRational parse(std::string_view text);
  // "p/q", or just "p" when the denominator is one.
  std::string to_string() const;

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == BigInt(1); }
  BigRational abs() const { return BigRational(num_.abs(), den_, Reduced{}); }
  BigRational reciprocal() const;
  // Greatest integer <= value (rounds toward negative infinity).
  BigInt floor() const { return floor_div(num_, den_); }

  BigRational operator-() const { return BigRational(-num_, den_, Reduced{}); }
  friend BigRational operator+(const BigRational& a, const BigRational& b);
  friend BigRational operator-(const BigRational& a, const BigRational& b);
  friend BigRational operator*(const BigRational& a, const BigRational& b);
  friend BigRational operator/(const BigRational& a, const BigRational& b);

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  struct Reduced {};
  BigRational(BigInt num, BigInt den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& v);

// re + i*im with exact rational parts.
struct GaussianRational {
  BigRational re;
  BigRational im;

  GaussianRational() = default;
  GaussianRational(BigRational r, BigRational i = BigRational()) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  GaussianRational conj() const { return {re, -im}; }
  BigRational norm() const { return re * re + im * im; }
  GaussianRational inverse() const;
  std::string to_string() const;

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;
};

// z^e by binary exponentiation; negative e inverts z exactly first.
// Zero base with negative exponent is a DomainError.
GaussianRational gauss_pow(const GaussianRational& z, const BigInt& e);

}  // namespace machinpi
