#include "machinpi/bigint.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "machinpi/errors.hpp"

namespace machinpi {

BigInt BigInt::parse(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw std::invalid_argument("empty integer literal");
  for (char ch : digits) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("invalid integer literal: " + std::string(text));
  }
  std::string s(text.front() == '+' ? text.substr(1) : text);
  return BigInt(mpz_class(s, 10));
}

BigInt BigInt::pow10(std::uint64_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return BigInt(std::move(r));
}

BigInt BigInt::pow2(std::uint64_t e) {
  mpz_class r = 1;
  r <<= e;
  return BigInt(std::move(r));
}

std::int64_t BigInt::decimal_digits() const {
  if (is_zero()) return 1;
  // mpz_sizeinbase may overshoot by one for base 10.
  auto d = static_cast<std::int64_t>(mpz_sizeinbase(v_.get_mpz_t(), 10));
  mpz_class a = ::abs(v_);
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(d - 1));
  return a < p ? d - 1 : d;
}

std::uint64_t BigInt::bit_length() const {
  if (is_zero()) return 0;
  return mpz_sizeinbase(v_.get_mpz_t(), 2);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw DomainError("floor_div: division by zero");
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(q));
}

BigInt trunc_div(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw DomainError("trunc_div: division by zero");
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(q));
}

BigInt floor_mod(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw DomainError("floor_mod: division by zero");
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(r));
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(g));
}

BigInt pow(const BigInt& base, std::uint64_t e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), e);
  return BigInt(std::move(r));
}

BigInt shift10(const BigInt& a, std::int64_t e) {
  if (e == 0) return a;
  if (e > 0) return a * BigInt::pow10(static_cast<std::uint64_t>(e));
  return trunc_div(a, BigInt::pow10(static_cast<std::uint64_t>(-e)));
}

namespace {

mpz_class isqrt_newton(const mpz_class& n) {
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  if (bits <= 52) {
    auto v = n.get_ui();
    auto r = static_cast<unsigned long>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return mpz_class(r);
  }
  // Half-size subproblem gives ~bits/4 correct leading bits, one Newton
  // step doubles that.
  const std::size_t s = bits / 4;
  mpz_class r = isqrt_newton(mpz_class(n >> (2 * s))) << s;
  r = (r + n / r) >> 1;
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

BigInt isqrt(const BigInt& n) {
  if (n.sign() < 0) throw DomainError("isqrt: negative argument");
  if (n.is_zero()) return BigInt(0);
  return BigInt(isqrt_newton(n.raw()));
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace machinpi
