#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace machinpi {

// Arbitrary-size signed integer. Thin value wrapper over GMP's mpz_class
// so the rest of the library never touches expression templates.
class BigInt {
 public:
  BigInt() = default;
  template <std::signed_integral T>
  BigInt(T v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  template <std::unsigned_integral T>
  BigInt(T v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)
  explicit BigInt(mpz_class v) : v_(std::move(v)) {}

  // Accepts an optional sign followed by decimal digits; throws
  // std::invalid_argument on anything else.
  static BigInt parse(std::string_view text);
  static BigInt pow10(std::uint64_t e);
  static BigInt pow2(std::uint64_t e);

  std::string to_string() const { return v_.get_str(10); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
  BigInt abs() const { return BigInt(mpz_class(::abs(v_))); }

  // Exact count of decimal digits of |x|; zero has one digit.
  std::int64_t decimal_digits() const;
  std::uint64_t bit_length() const;
  bool test_bit(std::uint64_t i) const { return mpz_tstbit(v_.get_mpz_t(), i) != 0; }

  bool fits_long() const { return v_.fits_slong_p(); }
  long to_long() const { return v_.get_si(); }
  double to_double() const { return v_.get_d(); }

  const mpz_class& raw() const { return v_; }

  BigInt operator-() const { return BigInt(mpz_class(-v_)); }
  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }

  friend BigInt operator+(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ + b.v_)); }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ - b.v_)); }
  friend BigInt operator*(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ * b.v_)); }

  friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpz_class v_;
};

// Quotient rounded toward negative infinity / toward zero. Divisor must be
// nonzero (DomainError otherwise).
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt trunc_div(const BigInt& a, const BigInt& b);
BigInt floor_mod(const BigInt& a, const BigInt& b);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt pow(const BigInt& base, std::uint64_t e);
// a * 10^e for e >= 0, a / 10^-e truncated toward zero for e < 0.
BigInt shift10(const BigInt& a, std::int64_t e);

// floor(sqrt(n)) for n >= 0 by Newton's method with doubling accuracy.
BigInt isqrt(const BigInt& n);

std::ostream& operator<<(std::ostream& os, const BigInt& v);

}  // namespace machinpi
