#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "machinpi/machin.hpp"
#include "machinpi/mpnum.hpp"

namespace machinpi {

enum class AlphaMode { exact, numeric, automatic };

struct IterationConfig {
  int k = 4;
  int leading_terms = 1;  // Machin terms folded into c
  int seed_digits = 100;  // correct digits of the seed
  int max_n = 42;         // largest tangent truncation order
  int rate_estimate = 0;  // digits per increment; 0 = measure from rows 1 and 2
  int base_precision = 0; // 0 = digits at n = 1 plus 7 guard digits
  AlphaMode alpha_mode = AlphaMode::automatic;

  // Working precision at truncation order n.
  int precision_at(int n) const { return base_precision + rate_estimate * n; }

  // The three reference schedules: (4, 1) -> 5 + 5n, (4, 2) -> 12 + 10n,
  // (27, 1) -> 25 + 18n.
  static std::optional<IterationConfig> preset(int k, int leading_terms);
};

// sigma, delta = c - sigma, tau = tan(2^{k-1} delta) and the two constants.
struct IterationState {
  MPReal sigma;
  MPReal delta;
  MPReal tau;
  MPReal c;
  MPReal alpha;
};

struct TraceRow {
  int n = 0;
  int digits = 0;

  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

struct IterationTrace {
  std::vector<TraceRow> rows;
  int before_digits = 0;
  int after_digits = 0;
};

struct IterationResult {
  MPReal pi;
  IterationTrace trace;
  IterationConfig config;  // with measured rate/base filled in
};

// alpha = tan(2^{k-1} c), either as the exact rational or a numeric value.
struct AlphaValue {
  std::variant<BigRational, MPReal> value;

  bool is_exact() const { return std::holds_alternative<BigRational>(value); }
  MPReal to_real(int precision) const;
};

// sigma_n = sigma_{n-1} + 2^-k (1 - tan(2^{k-1} sigma_{n-1})), sigma_1 = 2^-k,
// with the tangent from tan_pq (tangent_terms = 0 picks the order from the
// precision). Trace rows are the digits of 2^{k+1} sigma after each round.
// Throws NumericError when the digits regress or stall below the precision.
IterationResult iterate_basic(int k, int rounds, int precision, int tangent_terms = 0);

// c = 2^{1-k} * sum of the first `leading_terms` terms of f, via arctan_emi1.
MPReal compute_c(int k, const MachinFormula& f, int leading_terms, int precision);

// Exact mode chains tan_pow2_multiple / tan_nx_complex and tan_diff over the
// leading terms and refuses (DomainError) past `digit_budget` digits; numeric
// mode evaluates tan_pq(2^{k-1} c) at `precision`.
AlphaValue compute_alpha(int k, const MachinFormula& f, int leading_terms, AlphaMode mode, int precision,
                         std::uint64_t digit_budget = 10'000'000);

// One update: delta = c - sigma, tau = tan_pq(2^{k-1} delta, tangent_terms),
// sigma' = sigma + 2^-k (1 - (alpha - tau)/(1 + alpha tau)), at `precision`.
IterationState modified_step(const IterationState& s, int k, int tangent_terms, int precision);

// Argument-reduced iteration. Row n updates sigma_1 = seed/2^{k+1} once with
// tangent order n at precision base + rate * n and records the correct digits
// of 2^{k+1} sigma. Stops after three identical rows.
IterationResult iterate_modified(const IterationConfig& config, const MachinFormula& f, const MPReal& seed_pi,
                                 const MPReal& reference);
// Same, with the reference taken from bootstrap_pi.
IterationResult iterate_modified(const IterationConfig& config, const MachinFormula& f, const MPReal& seed_pi);

struct RationalStep {
  int before = 0;
  int after = 0;
  MPReal sigma1;
  MPReal sigma2;
  BigRational tangent;  // exact tan(2^{k-1} sigma_1)
};

// One update of the basic iteration using the exact rational tangent of the
// first `terms` terms (all integer beta).
RationalStep rational_single_step(int k, const MachinFormula& f, int terms, int precision);
RationalStep rational_single_step(int k, const MachinFormula& f, int terms, int precision, const MPReal& reference);

// pi to `digits` significant digits (>= 10) from the seven-term k = 4 formula.
MPReal bootstrap_pi(int digits);

// floor(pi 10^digits) / 10^digits, tagged with digits + 1 significant digits.
MPReal truncated_seed(int digits);

// Reference precision used for digit counting when none is supplied.
int reference_digits_for(int target_digits);

// "<before> digits of pi before iteration" table in the fixed column layout.
std::string trace_to_table(const IterationTrace& trace);
// {"before": int, "rows": [[n, digits], ...], "after": int}
std::string trace_to_json(const IterationTrace& trace);

}  // namespace machinpi
