#pragma once

#include <optional>

#include "machinpi/machin.hpp"
#include "machinpi/mpnum.hpp"

namespace machinpi {

struct ValidationReport {
  bool is_valid = false;           // product.re == product.im exactly
  GaussianRational product;        // prod (beta_j + i)^coeff_j
  std::optional<MPReal> lehmer;    // absent when some |beta_j| <= 1
  bool has_rational_beta = false;  // the measure is only meaningful for integer beta
};

// Exact Gaussian product relation; a valid formula has prod (beta_j + i)^coeff_j
// proportional to 1 + i.
ValidationReport check_product_relation(const MachinFormula& f, int lehmer_precision = 15);

// Lehmer's measure sum 1/log10|beta_j|. DomainError when some |beta_j| <= 1.
MPReal lehmer_measure(const MachinFormula& f, int precision = 15);

}  // namespace machinpi
