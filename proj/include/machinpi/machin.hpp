#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "machinpi/mpnum.hpp"

namespace machinpi {

// coeff * arctan(1 / beta); beta is never zero.
struct ArctanTerm {
  BigInt coeff;
  BigRational beta;

  friend bool operator==(const ArctanTerm&, const ArctanTerm&) = default;
};

// Asserts sum coeff_j * arctan(1 / beta_j) = pi / 4.
struct MachinFormula {
  std::vector<ArctanTerm> terms;
  std::string provenance;

  friend bool operator==(const MachinFormula&, const MachinFormula&) = default;
};

struct ExpansionState {
  int k = 0;
  BigInt A_k;
  std::vector<BigRational> B_list;  // B_{1,k} ... B_{M+1,k}
  bool terminated = false;          // last B is an exact integer
};

struct Expansion {
  MachinFormula formula;
  ExpansionState state;
};

struct ArctanSplit {
  BigInt floor;
  BigRational residual;  // argument (not reciprocal) of the remainder arctan
};

// B_{1,k} = u_k / (1 - v_k) from the u/v squaring recursion seeded with
// (A^2 - 1)/(A^2 + 1) and 2A/(A^2 + 1). Requires k >= 2 and A_k >= 2.
BigRational b1k_two_step(const BigInt& A_k, int k);

// eta = 2 / (((gamma + i)/(gamma - i))^phi - i) - i, exactly. phi >= 1.
BigRational eta_general(const BigRational& gamma, const BigInt& phi);

// pi/4 = 2^{k-1} arctan(1/A_k) + sum_{m<=M} arctan(1/floor(B_m)) + arctan(1/B_{M+1}),
// stopping early when some B is an integer.
Expansion expand_formula(int k, int max_M = 8);

// The first terms of the k-th expansion: just the leading term when
// terms == 1 (no B_{1,k} needed), otherwise expand_formula(k, terms - 1).
MachinFormula leading_formula(int k, int terms);

// arctan(1/z) = arctan(1/floor(z)) + arctan((floor(z) - z)/(1 + z floor(z)))
// for z outside [0, 1).
ArctanSplit split_arctan(const BigRational& z);

// The same split applied to one term of a formula; one or two terms result.
std::vector<ArctanTerm> split_term(const ArctanTerm& term);

// {"provenance": ..., "terms": [{"coeff": "8", "beta_num": "10", "beta_den": "1"}, ...]}
std::string formula_to_json(const MachinFormula& f);
MachinFormula formula_from_json(std::string_view text);
void write_formula(const std::filesystem::path& path, const MachinFormula& f);
MachinFormula read_formula(const std::filesystem::path& path);

// Human-readable "pi/4 = 8 arctan(1/10) - arctan(1/84) ..." rendering.
std::string describe(const MachinFormula& f);

}  // namespace machinpi
