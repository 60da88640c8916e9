#include "machinpi/mpreal.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "machinpi/errors.hpp"

namespace machinpi {

namespace {

void check_precision(int precision) {
  if (precision < 1) throw DomainError("MPReal: precision must be positive");
}

}  // namespace

MPReal MPReal::from_parts(BigInt mantissa, std::int64_t exponent10, int precision) {
  check_precision(precision);
  if (mantissa.is_zero()) return MPReal(BigInt(0), 0, precision);
  const std::int64_t digits = mantissa.decimal_digits();
  if (digits > precision) {
    const std::int64_t drop = digits - precision;
    mantissa = shift10(mantissa, -drop);
    exponent10 += drop;
  }
  return MPReal(std::move(mantissa), exponent10, precision);
}

MPReal MPReal::from_int(const BigInt& v, int precision) { return from_parts(v, 0, precision); }

MPReal MPReal::from_rational(const BigRational& v, int precision) {
  check_precision(precision);
  if (v.is_zero()) return MPReal(BigInt(0), 0, precision);
  // Enough quotient digits that the final truncation sees P + 1 of them.
  const std::int64_t s = precision + 1 + v.den().decimal_digits() - v.num().decimal_digits();
  BigInt q = s >= 0 ? trunc_div(shift10(v.num(), s), v.den())
                    : trunc_div(v.num(), v.den() * BigInt::pow10(static_cast<std::uint64_t>(-s)));
  return from_parts(std::move(q), -s, precision);
}

MPReal MPReal::parse_decimal(std::string_view text, int precision) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::int64_t exp = 0;
  if (auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
    exp = BigInt::parse(s.substr(epos + 1)).to_long();
    s = s.substr(0, epos);
  }
  std::string digits;
  bool seen_point = false;
  for (char ch : s) {
    if (ch == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      if (seen_point) --exp;
    } else {
      throw std::invalid_argument("invalid decimal literal: " + std::string(text));
    }
  }
  if (digits.empty()) throw std::invalid_argument("invalid decimal literal: " + std::string(text));
  BigInt m = BigInt::parse(digits);
  return from_parts(negative ? -m : m, exp, precision);
}

MPReal MPReal::parse(std::string_view text) {
  const auto e = text.find('e');
  const auto at = text.find('@');
  if (e == std::string_view::npos || at == std::string_view::npos || at < e) {
    throw std::invalid_argument("invalid MPReal serialization: " + std::string(text));
  }
  BigInt m = BigInt::parse(text.substr(0, e));
  BigInt ex = BigInt::parse(text.substr(e + 1, at - e - 1));
  BigInt p = BigInt::parse(text.substr(at + 1));
  if (!ex.fits_long() || !p.fits_long() || p.to_long() < 1 || p.to_long() > (1L << 30)) {
    throw std::invalid_argument("MPReal serialization out of range: " + std::string(text));
  }
  return from_parts(std::move(m), ex.to_long(), static_cast<int>(p.to_long()));
}

std::string MPReal::to_string() const {
  return mantissa_.to_string() + "e" + std::to_string(exponent_) + "@" + std::to_string(precision_);
}

std::string MPReal::to_fixed(int decimals) const {
  const MPReal t = truncate_decimals(*this, decimals);
  // Scaled integer of the truncated value at exactly `decimals` places.
  const BigInt scaled = shift10(t.mantissa_, t.exponent_ + decimals);
  std::string digits = scaled.abs().to_string();
  if (static_cast<int>(digits.size()) <= decimals) {
    digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
  }
  std::string out = scaled.sign() < 0 ? "-" : "";
  out += digits.substr(0, digits.size() - static_cast<std::size_t>(decimals));
  if (decimals > 0) out += "." + digits.substr(digits.size() - static_cast<std::size_t>(decimals));
  return out;
}

std::int64_t MPReal::magnitude() const {
  if (is_zero()) throw DomainError("MPReal: magnitude of zero");
  return mantissa_.decimal_digits() - 1 + exponent_;
}

MPReal MPReal::with_precision(int precision) const {
  check_precision(precision);
  if (precision >= precision_) return MPReal(mantissa_, exponent_, precision);
  return from_parts(mantissa_, exponent_, precision);
}

double MPReal::to_double() const {
  if (is_zero()) return 0.0;
  // Keep 17 leading digits, then scale.
  const MPReal head = from_parts(mantissa_, exponent_, std::min(precision_, 17));
  return head.mantissa_.to_double() * std::pow(10.0, static_cast<double>(head.exponent_));
}

int MPReal::compare(const MPReal& a, const MPReal& b) {
  if (a.sign() != b.sign()) return a.sign() < b.sign() ? -1 : 1;
  if (a.is_zero()) return 0;
  const std::int64_t ma = a.magnitude();
  const std::int64_t mb = b.magnitude();
  if (ma != mb) return (ma < mb ? -1 : 1) * a.sign();
  const std::int64_t e = std::min(a.exponent_, b.exponent_);
  const BigInt x = shift10(a.mantissa_, a.exponent_ - e);
  const BigInt y = shift10(b.mantissa_, b.exponent_ - e);
  return x < y ? -1 : (x > y ? 1 : 0);
}

MPReal operator+(const MPReal& a, const MPReal& b) {
  const int p = std::min(a.precision_, b.precision_);
  if (a.is_zero()) return b.with_precision(p);
  if (b.is_zero()) return a.with_precision(p);
  // Digits far below the result's last place cannot matter beyond a
  // fraction of an ulp; cut them before aligning.
  const std::int64_t top = std::max(a.magnitude(), b.magnitude()) + 1;
  const std::int64_t floor_exp = top - p - 3;
  BigInt ma = a.mantissa_;
  BigInt mb = b.mantissa_;
  std::int64_t ea = a.exponent_;
  std::int64_t eb = b.exponent_;
  if (ea < floor_exp) {
    ma = shift10(ma, ea - floor_exp);
    ea = floor_exp;
  }
  if (eb < floor_exp) {
    mb = shift10(mb, eb - floor_exp);
    eb = floor_exp;
  }
  const std::int64_t e = std::min(ea, eb);
  return MPReal::from_parts(shift10(ma, ea - e) + shift10(mb, eb - e), e, p);
}

MPReal operator*(const MPReal& a, const MPReal& b) {
  const int p = std::min(a.precision_, b.precision_);
  return MPReal::from_parts(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_, p);
}

MPReal operator/(const MPReal& a, const MPReal& b) {
  const int p = std::min(a.precision_, b.precision_);
  if (b.is_zero()) throw DomainError("MPReal: division by zero");
  if (a.is_zero()) return MPReal(BigInt(0), 0, p);
  // Truncating the integer quotient and then to p digits equals a single
  // truncation of the exact quotient.
  const std::int64_t s =
      std::max<std::int64_t>(0, p + 1 + b.mantissa_.decimal_digits() - a.mantissa_.decimal_digits());
  BigInt q = trunc_div(shift10(a.mantissa_, s), b.mantissa_);
  return MPReal::from_parts(std::move(q), a.exponent_ - b.exponent_ - s, p);
}

namespace {

MPReal exact_int(const BigInt& v, int at_least) {
  return MPReal::from_int(v, std::max<int>(at_least, static_cast<int>(v.decimal_digits())));
}

}  // namespace

MPReal operator+(const MPReal& a, const BigInt& b) {
  return (a + exact_int(b, a.precision_)).with_precision(a.precision_);
}

MPReal operator*(const MPReal& a, const BigInt& b) {
  return (a * exact_int(b, a.precision_)).with_precision(a.precision_);
}

MPReal operator/(const MPReal& a, const BigInt& b) {
  return (a / exact_int(b, a.precision_)).with_precision(a.precision_);
}

std::ostream& operator<<(std::ostream& os, const MPReal& v) { return os << v.to_string(); }

MPReal times_exact(const MPReal& x, const BigInt& f) {
  const int p = x.precision() + static_cast<int>(f.decimal_digits());
  return MPReal::from_parts(x.mantissa() * f, x.exponent10(), p);
}

MPReal truncate_decimals(const MPReal& a, int decimals) {
  if (a.exponent10() >= -decimals) return a;
  const std::int64_t drop = -decimals - a.exponent10();
  BigInt m = floor_div(a.mantissa(), BigInt::pow10(static_cast<std::uint64_t>(drop)));
  return MPReal::from_parts(std::move(m), -decimals, a.precision());
}

MPReal sqrt(const MPReal& a) {
  if (a.sign() < 0) throw DomainError("sqrt: negative argument");
  const int p = a.precision();
  if (a.is_zero()) return MPReal::from_int(BigInt(0), p);
  // Scale to an integer N with at least 2p + 2 digits and an even exponent,
  // then r = isqrt(N) carries p + 1 correct digits of the root.
  std::int64_t t = std::max<std::int64_t>(0, 2 * static_cast<std::int64_t>(p) + 2 - a.mantissa().decimal_digits());
  if ((a.exponent10() - t) % 2 != 0) ++t;
  BigInt r = isqrt(shift10(a.mantissa(), t));
  return MPReal::from_parts(std::move(r), (a.exponent10() - t) / 2, p);
}

namespace {

constexpr int kLnHalvings = 12;

// ln(y) for y in [1, 10] at working precision w: take 2^12-th root, then
// the atanh series 2 * sum z^(2i+1)/(2i+1) with z = (y-1)/(y+1).
MPReal ln_reduced(const MPReal& y, int w) {
  MPReal r = y.with_precision(w);
  for (int i = 0; i < kLnHalvings; ++i) r = sqrt(r);
  const MPReal one = MPReal::from_int(BigInt(1), w);
  const MPReal z = (r - one) / (r + one);
  if (z.is_zero()) return MPReal::from_int(BigInt(0), w);
  const MPReal z2 = z * z;
  MPReal power = z;
  MPReal sum = z;
  for (long i = 1;; ++i) {
    power = power * z2;
    if (power.is_zero() || power.magnitude() < sum.magnitude() - w - 2) break;
    sum = sum + power / BigInt(2 * i + 1);
  }
  return sum * BigInt::pow2(kLnHalvings + 1);
}

}  // namespace

MPReal ln(const MPReal& a) {
  if (a.sign() <= 0) throw DomainError("ln: argument must be positive");
  const int p = a.precision();
  const int w = p + 15;
  const std::int64_t e = a.magnitude();
  const MPReal m = MPReal::from_parts(a.mantissa(), a.exponent10() - e, w);
  MPReal result = ln_reduced(m, w);
  if (e != 0) result = result + ln_reduced(MPReal::from_int(BigInt(10), w), w) * BigInt(e);
  return result.with_precision(p);
}

MPReal log10(const MPReal& a) {
  if (a.sign() <= 0) throw DomainError("log10: argument must be positive");
  const int p = a.precision();
  const int w = p + 15;
  const std::int64_t e = a.magnitude();
  const MPReal m = MPReal::from_parts(a.mantissa(), a.exponent10() - e, w);
  const MPReal frac = ln_reduced(m, w) / ln_reduced(MPReal::from_int(BigInt(10), w), w);
  return (frac + BigInt(e)).with_precision(p);
}

BigInt floor_to_int(const MPReal& a) {
  if (a.is_zero()) return BigInt(0);
  const std::int64_t e = a.exponent10();
  const std::int64_t u = a.ulp_exponent();
  auto ambiguous = [&] {
    return FloorAmbiguity("floor_to_int: value within 10 ulp of an integer at precision " +
                              std::to_string(a.precision()),
                          2 * a.precision());
  };
  if (e >= 0 || u >= 0) throw ambiguous();
  const BigInt scale = BigInt::pow10(static_cast<std::uint64_t>(-e));
  const BigInt fl = floor_div(a.mantissa(), scale);
  const BigInt frac = a.mantissa() - fl * scale;  // in units of 10^e
  const BigInt dist = std::min(frac, scale - frac);
  // dist * 10^e <= 10 * 10^u ?
  const bool close = e >= u + 1 ? dist * BigInt::pow10(static_cast<std::uint64_t>(e - u - 1)) <= BigInt(1)
                                : dist <= BigInt::pow10(static_cast<std::uint64_t>(u + 1 - e));
  if (close) throw ambiguous();
  return fl;
}

BigInt floor_to_int(const std::function<MPReal(int)>& evaluate, int start_precision, int max_precision) {
  int precision = start_precision;
  for (;;) {
    try {
      return floor_to_int(evaluate(precision));
    } catch (const FloorAmbiguity& amb) {
      if (amb.needed_precision() > max_precision) throw;
      precision = amb.needed_precision();
    }
  }
}

int agreement_digits(const MPReal& a, const MPReal& ref) {
  const int p = std::max(a.precision(), ref.precision());
  const MPReal diff = ref.with_precision(p) - a.with_precision(p);
  if (diff.is_zero()) return ref.precision();
  return static_cast<int>(std::llabs(diff.magnitude() + 1));
}

}  // namespace machinpi
