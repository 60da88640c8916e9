#include <doctest.h>

#include "machinpi/radicals.hpp"
#include "oracle.hpp"

using namespace machinpi;

namespace {

// cot(x) = 1/x - x/3 - x^3/45 - 2x^5/945 - x^7/4725 - ..., with x = pi / 2^(k+1)
// taken from the frozen digits. Good to far below one unit for k >= 2.
BigInt cot_floor(int k) {
  const BigRational pi(oracle::pi(200).mantissa(), BigInt::pow10(199));
  const BigRational x = pi / BigRational(BigInt::pow2(static_cast<std::uint64_t>(k + 1)));
  const BigRational x2 = x * x;
  const BigRational cot = x.reciprocal() - x / BigRational(3) - x * x2 / BigRational(45) -
                          BigRational(2) * x * x2 * x2 / BigRational(945) -
                          x * x2 * x2 * x2 / BigRational(4725);
  return cot.floor();
}

}  // namespace

TEST_CASE("nested radical seeds") {
  CHECK(nested_radical(0, 20).a_k.is_zero());
  CHECK_FALSE(nested_radical(0, 20).has_previous);
  const RadicalPair a1 = nested_radical(1, 30);
  CHECK(a1.a_k.to_fixed(8) == "1.41421356");
  CHECK(a1.has_previous);
  CHECK(a1.a_k_minus_1.is_zero());
}

TEST_CASE("a_2 squared twice gives back 2") {
  const MPReal a2 = nested_radical(2, 30).a_k;
  CHECK(a2.to_fixed(9) == "1.847759065");
  const MPReal w = a2.with_precision(80);
  const MPReal inner = w * w - BigInt(2);  // sqrt 2
  const MPReal back = inner * inner;
  CHECK(agreement_digits(back.with_precision(30), MPReal::from_int(BigInt(2), 60)) >= 28);
}

TEST_CASE("radicals track 2 cos(pi / 2^(k+1))") {
  // 2 - a_k = 4 sin^2(pi / 2^(k+2)) ~ (pi / 2^(k+1))^2
  for (int k : {10, 20, 30}) {
    const MPReal gap = MPReal::from_int(BigInt(2), 60) - nested_radical(k, 60).a_k;
    const MPReal x = oracle::pi(60) / BigInt::pow2(static_cast<std::uint64_t>(k + 1));
    const MPReal ratio = gap / (x * x);
    CHECK(ratio.to_double() == doctest::Approx(1.0).epsilon(1e-6));
  }
  CHECK_THROWS_AS(nested_radical(-1, 20), DomainError);
  CHECK_THROWS_AS(nested_radical(3, 5), DomainError);
}

TEST_CASE("compute_Ak fixtures") {
  CHECK(compute_Ak(2) == BigInt(2));
  CHECK(compute_Ak(3) == BigInt(5));
  CHECK(compute_Ak(4) == BigInt(10));
  CHECK(compute_Ak(27) == BigInt(85445659));
  CHECK(compute_Ak(1) == BigInt(1));
  CHECK_THROWS_AS(compute_Ak(0), DomainError);
}

TEST_CASE("compute_Ak equals floor of the cotangent series") {
  for (int k = 2; k <= 48; ++k) {
    CAPTURE(k);
    CHECK(compute_Ak(k) == cot_floor(k));
  }
}
