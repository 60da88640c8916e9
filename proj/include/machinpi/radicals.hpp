#pragma once

#include "machinpi/mpnum.hpp"

namespace machinpi {

// Nested radicals of two: a_0 = 0, a_k = sqrt(2 + a_{k-1}).
struct RadicalPair {
  MPReal a_k;
  MPReal a_k_minus_1;  // unset when k == 0
  int k = 0;
  bool has_previous = false;
};

// a_k and a_{k-1} by forward recursion at `precision` digits (>= 10).
RadicalPair nested_radical(int k, int precision);

// A_k = floor(a_k / sqrt(2 - a_{k-1})) for k >= 1, escalating precision until
// the floor is unambiguous.
BigInt compute_Ak(int k);

}  // namespace machinpi
