#include "machinpi/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "machinpi/errors.hpp"

namespace machinpi {

BigRational::BigRational(BigInt num, BigInt den) {
  if (den.is_zero()) throw DomainError("BigRational: zero denominator");
  if (den.sign() < 0) {
    num = -num;
    den = -den;
  }
  BigInt g = gcd(num, den);
  if (g != BigInt(1)) {
    num = trunc_div(num, g);
    den = trunc_div(den, g);
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

BigRational BigRational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(BigInt::parse(text));
  return BigRational(BigInt::parse(text.substr(0, slash)), BigInt::parse(text.substr(slash + 1)));
}

std::string BigRational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

BigRational BigRational::reciprocal() const {
  if (is_zero()) throw DomainError("BigRational: reciprocal of zero");
  if (num_.sign() < 0) return BigRational(-den_, -num_, Reduced{});
  return BigRational(den_, num_, Reduced{});
}

BigRational operator+(const BigRational& a, const BigRational& b) {
  if (a.den_ == b.den_) return BigRational(a.num_ + b.num_, a.den_);
  return BigRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

BigRational operator-(const BigRational& a, const BigRational& b) { return a + (-b); }

BigRational operator*(const BigRational& a, const BigRational& b) {
  if (a.is_zero() || b.is_zero()) return BigRational();
  // Cross-cancel first so the products stay small.
  BigInt g1 = gcd(a.num_, b.den_);
  BigInt g2 = gcd(b.num_, a.den_);
  return BigRational(trunc_div(a.num_, g1) * trunc_div(b.num_, g2),
                     trunc_div(a.den_, g2) * trunc_div(b.den_, g1), BigRational::Reduced{});
}

BigRational operator/(const BigRational& a, const BigRational& b) { return a * b.reciprocal(); }

std::ostream& operator<<(std::ostream& os, const BigRational& v) { return os << v.to_string(); }

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw DomainError("GaussianRational: inverse of zero");
  BigRational n = norm();
  return {re / n, -im / n};
}

std::string GaussianRational::to_string() const {
  std::string s = re.to_string();
  if (im.sign() < 0) return s + " - " + (-im).to_string() + "i";
  return s + " + " + im.to_string() + "i";
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianRational gauss_pow(const GaussianRational& z, const BigInt& e) {
  if (e.is_zero()) return GaussianRational(BigRational(1));
  GaussianRational base = z;
  if (e.sign() < 0) {
    if (z.is_zero()) throw DomainError("gauss_pow: zero base with negative exponent");
    base = z.inverse();
  }
  const BigInt mag = e.abs();
  GaussianRational result(BigRational(1));
  const std::uint64_t bits = mag.bit_length();
  for (std::uint64_t i = bits; i-- > 0;) {
    result = result * result;
    if (mag.test_bit(i)) result = result * base;
  }
  return result;
}

}  // namespace machinpi
