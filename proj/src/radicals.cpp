#include "machinpi/radicals.hpp"

#include <cmath>
#include <string>

namespace machinpi {

RadicalPair nested_radical(int k, int precision) {
  if (k < 0) throw DomainError("nested_radical: k must be non-negative");
  if (precision < 10) throw DomainError("nested_radical: precision must be at least 10");
  // One truncation per level; a few guard digits absorb k ulps.
  const int w = precision + 3 + static_cast<int>(std::ceil(std::log10(k + 1.0)));
  const BigInt two(2);
  MPReal prev;
  MPReal cur = MPReal::from_int(BigInt(0), w);
  for (int i = 1; i <= k; ++i) {
    prev = cur;
    cur = sqrt(cur + two);
  }
  RadicalPair out;
  out.k = k;
  out.a_k = cur.with_precision(precision);
  if (k > 0) {
    out.a_k_minus_1 = prev.with_precision(precision);
    out.has_previous = true;
  }
  return out;
}

BigInt compute_Ak(int k) {
  if (k < 1) throw DomainError("compute_Ak: k must be at least 1");
  // a_1 / sqrt(2 - a_0) is exactly 1; no precision settles that floor.
  if (k == 1) return BigInt(1);
  // 2 - a_{k-1} ~ (pi / 2^k)^2 cancels about 0.602 k digits, so the radicals
  // are carried that much further than the tagged result precision.
  const int loss = static_cast<int>(std::ceil(0.61 * k)) + 10;
  auto evaluate = [k, loss](int p) {
    const RadicalPair r = nested_radical(k, p + loss);
    const MPReal gap = MPReal::from_int(BigInt(2), p + loss) - r.a_k_minus_1;
    return (r.a_k / sqrt(gap)).with_precision(p);
  };
  const int start = static_cast<int>(std::ceil(0.302 * k)) + 20;
  return floor_to_int(evaluate, start);
}

}  // namespace machinpi
