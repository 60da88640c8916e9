#include "machinpi/pi_iter.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "machinpi/series.hpp"

namespace machinpi {

namespace {

MPReal one(int p) { return MPReal::from_int(BigInt(1), p); }

int digits_of(const BigInt& v) { return static_cast<int>(v.decimal_digits()); }

// arctan(1/beta) at precision p via the single-midpoint EMI series.
MPReal arctan_inverse(const BigRational& beta, int p) {
  const MPReal x = MPReal::from_rational(beta.reciprocal(), p + 5);
  const double gain = emi1_digits_per_term(x);
  const int terms = static_cast<int>(std::ceil((p + 5) / gain)) + 2;
  return arctan_emi1(x, terms).with_precision(p);
}

void require_leading(int k, const MachinFormula& f, int leading_terms, const char* op) {
  if (k < 1) throw DomainError(std::string(op) + ": k must be >= 1");
  if (leading_terms < 1 || static_cast<std::size_t>(leading_terms) > f.terms.size())
    throw DomainError(std::string(op) + ": leading_terms out of range");
  if (f.terms.front().coeff != BigInt::pow2(k - 1))
    throw DomainError(std::string(op) + ": first coefficient is not 2^(k-1)");
}

// tan of sum_{j < terms} coeff_j arctan(1/beta_j), exactly.
BigRational exact_tangent(int k, const MachinFormula& f, int terms, std::uint64_t budget, const char* op) {
  for (int j = 0; j < terms; ++j)
    if (!f.terms[j].beta.is_integer())
      throw DomainError(std::string(op) + ": exact tangent needs integer beta");
  const BigInt& a = f.terms.front().beta.num();
  const double estimate = std::ldexp(static_cast<double>(digits_of(a.abs())) + 0.5, k - 1);
  if (estimate > static_cast<double>(budget))
    throw DomainError(std::string(op) + ": exact alpha needs about " + std::to_string(estimate) +
                      " digits, over the budget; use numeric mode");
  BigRational t = tan_pow2_multiple(BigRational(BigInt(1), a), k - 1);
  for (int j = 1; j < terms; ++j) {
    const ArctanTerm& term = f.terms[j];
    t = tan_diff(t, -tan_nx_complex(term.beta.reciprocal(), term.coeff, budget));
  }
  return t;
}

}  // namespace

std::optional<IterationConfig> IterationConfig::preset(int k, int leading_terms) {
  auto make = [&](int base, int rate, int max_n, int seed) {
    IterationConfig c;
    c.k = k;
    c.leading_terms = leading_terms;
    c.base_precision = base;
    c.rate_estimate = rate;
    c.max_n = max_n;
    c.seed_digits = seed;
    return c;
  };
  if (k == 4 && leading_terms == 1) return make(5, 5, 42, 100);
  if (k == 4 && leading_terms == 2) return make(12, 10, 42, 200);
  if (k == 27 && leading_terms == 1) return make(25, 18, 46, 402);
  return std::nullopt;
}

MPReal AlphaValue::to_real(int precision) const {
  if (const auto* q = std::get_if<BigRational>(&value)) return MPReal::from_rational(*q, precision);
  return std::get<MPReal>(value).with_precision(precision);
}

int reference_digits_for(int target_digits) {
  return static_cast<int>(std::ceil(2.2 * std::max(target_digits, 10)));
}

MPReal bootstrap_pi(int digits) {
  if (digits < 10) throw DomainError("bootstrap_pi: digits must be >= 10");
  static const MachinFormula formula = expand_formula(4, 5).formula;
  const int w = digits + 10;
  MPReal sum = MPReal::from_int(BigInt(0), w);
  for (const ArctanTerm& t : formula.terms) sum = sum + arctan_inverse(t.beta, w) * t.coeff;
  return (sum * BigInt(4)).with_precision(digits);
}

MPReal truncated_seed(int digits) {
  if (digits < 1) throw DomainError("truncated_seed: digits must be >= 1");
  const MPReal pi = bootstrap_pi(std::max(digits, 10) + 10);
  return truncate_decimals(pi, digits).with_precision(digits + 1);
}

IterationResult iterate_basic(int k, int rounds, int precision, int tangent_terms) {
  if (k < 1) throw DomainError("iterate_basic: k must be >= 1");
  if (rounds < 1) throw DomainError("iterate_basic: rounds must be >= 1");
  if (precision < 10) throw DomainError("iterate_basic: precision must be >= 10");
  const int w = precision + digits_of(BigInt::pow2(k + 1)) + 5;
  const int terms = tangent_terms > 0 ? tangent_terms : tan_pq_terms_for(0.8, w + 5);
  const MPReal ref = bootstrap_pi(reference_digits_for(precision));
  const BigInt two_k = BigInt::pow2(k);
  const BigInt half_scale = BigInt::pow2(k - 1);

  IterationResult out;
  out.config.k = k;
  out.config.max_n = rounds;
  MPReal sigma = one(w) / two_k;
  out.trace.before_digits = agreement_digits(times_exact(sigma, BigInt::pow2(k + 1)), ref);
  int stalled = 0;
  for (int n = 1; n <= rounds; ++n) {
    const MPReal t = tan_pq(sigma * half_scale, terms);
    sigma = (sigma + (one(w) - t) / two_k).with_precision(w);
    out.pi = times_exact(sigma, BigInt::pow2(k + 1)).with_precision(precision);
    const int d = agreement_digits(out.pi, ref);
    if (!out.trace.rows.empty()) {
      const int prev = out.trace.rows.back().digits;
      if (prev >= 4 && d < prev)
        throw NumericError("iterate_basic: digits fell from " + std::to_string(prev) + " to " +
                           std::to_string(d) + " at round " + std::to_string(n) +
                           "; tangent truncation too low");
      stalled = (d == prev && d < precision - 5) ? stalled + 1 : 0;
      if (stalled >= 2)
        throw NumericError("iterate_basic: stuck at " + std::to_string(d) +
                           " digits; tangent truncation too low");
    }
    out.trace.rows.push_back({n, d});
  }
  out.trace.after_digits = out.trace.rows.back().digits;
  return out;
}

MPReal compute_c(int k, const MachinFormula& f, int leading_terms, int precision) {
  require_leading(k, f, leading_terms, "compute_c");
  const int w = precision + 5;
  MPReal sum = MPReal::from_int(BigInt(0), w);
  for (int j = 0; j < leading_terms; ++j) sum = sum + arctan_inverse(f.terms[j].beta, w) * f.terms[j].coeff;
  return (sum / BigInt::pow2(k - 1)).with_precision(precision);
}

AlphaValue compute_alpha(int k, const MachinFormula& f, int leading_terms, AlphaMode mode, int precision,
                         std::uint64_t digit_budget) {
  require_leading(k, f, leading_terms, "compute_alpha");
  if (mode != AlphaMode::numeric) {
    try {
      return {exact_tangent(k, f, leading_terms, digit_budget, "compute_alpha")};
    } catch (const DomainError&) {
      if (mode == AlphaMode::exact) throw;
    }
  }
  const BigInt scale = BigInt::pow2(k - 1);
  const MPReal c = compute_c(k, f, leading_terms, precision + digits_of(scale) + 10);
  const MPReal arg = (c * scale).with_precision(precision + 10);
  return {tan_pq(arg, tan_pq_terms_for(0.8, precision + 10)).with_precision(precision)};
}

IterationState modified_step(const IterationState& s, int k, int tangent_terms, int precision) {
  IterationState next = s;
  next.delta = (s.c - s.sigma).with_precision(precision);
  next.tau = tan_pq(next.delta * BigInt::pow2(k - 1), tangent_terms).with_precision(precision);
  const MPReal a = s.alpha.with_precision(precision);
  const MPReal ratio = (a - next.tau) / (one(precision) + a * next.tau);
  next.sigma = (s.sigma + (one(precision) - ratio) / BigInt::pow2(k)).with_precision(precision);
  return next;
}

IterationResult iterate_modified(const IterationConfig& config, const MachinFormula& f, const MPReal& seed_pi) {
  int target = 2 * config.seed_digits + 50;
  if (config.rate_estimate != 0 && config.base_precision > 0)
    target = std::max(target, config.precision_at(config.max_n));
  return iterate_modified(config, f, seed_pi, bootstrap_pi(reference_digits_for(target)));
}

IterationResult iterate_modified(const IterationConfig& config, const MachinFormula& f, const MPReal& seed_pi,
                                 const MPReal& reference) {
  const int k = config.k;
  require_leading(k, f, config.leading_terms, "iterate_modified");
  if (config.max_n < 1) throw DomainError("iterate_modified: max_n must be >= 1");
  if (seed_pi.is_zero()) throw DomainError("iterate_modified: seed is zero");
  const BigInt scale = BigInt::pow2(k + 1);
  const BigInt half_scale = BigInt::pow2(k - 1);
  const int pad = digits_of(half_scale) + 20;
  const int probe_w = 2 * std::max(config.seed_digits, agreement_digits(seed_pi, reference)) + pad;

  IterationResult out;
  out.config = config;
  int wc = probe_w;
  if (config.rate_estimate != 0 && config.base_precision > 0)
    wc = std::max(wc, config.precision_at(config.max_n) + pad);

  IterationState s;
  s.c = compute_c(k, f, config.leading_terms, wc);
  s.alpha = compute_alpha(k, f, config.leading_terms, config.alpha_mode, wc).to_real(wc);
  s.sigma = seed_pi.with_precision(wc) / scale;
  s.delta = s.c - s.sigma;
  s.tau = MPReal::from_int(BigInt(0), wc);

  // Row n: one update of sigma_1 with tangent order n, truncated to precision p.
  auto row = [&](int n, int p) {
    MPReal sigma2 = modified_step(s, k, n, wc).sigma.with_precision(p);
    MPReal pi = times_exact(sigma2, scale);
    return std::pair{pi, agreement_digits(pi, reference)};
  };

  out.trace.before_digits = agreement_digits(seed_pi, reference);
  if (out.config.rate_estimate == 0 || out.config.base_precision <= 0) {
    const int d1 = row(1, wc).second;
    const int d2 = row(2, wc).second;
    if (out.config.rate_estimate == 0) out.config.rate_estimate = std::max(1, d2 - d1);
    if (out.config.base_precision <= 0) out.config.base_precision = d1 + 7;
    const int need = out.config.precision_at(out.config.max_n) + pad;
    if (need > wc) {
      wc = need;
      s.c = compute_c(k, f, config.leading_terms, wc);
      s.alpha = compute_alpha(k, f, config.leading_terms, config.alpha_mode, wc).to_real(wc);
      s.sigma = seed_pi.with_precision(wc) / scale;
      s.delta = s.c - s.sigma;
    }
  }

  const int saturation = 2 * out.trace.before_digits - 2;
  for (int n = 1; n <= out.config.max_n; ++n) {
    const int p = out.config.precision_at(n);
    if (p < 1) throw DomainError("iterate_modified: precision schedule reaches " + std::to_string(p) + " digits");
    auto [pi, d] = row(n, p);
    auto& rows = out.trace.rows;
    if (!rows.empty() && d < rows.back().digits && rows.back().digits < saturation)
      throw NumericError("iterate_modified: digits fell from " + std::to_string(rows.back().digits) + " to " +
                         std::to_string(d) + " at n = " + std::to_string(n) + "; precision schedule too tight");
    rows.push_back({n, d});
    out.pi = pi;
    const std::size_t m = rows.size();
    if (m >= 3 && rows[m - 1].digits == rows[m - 2].digits && rows[m - 2].digits == rows[m - 3].digits) break;
  }
  out.trace.after_digits = out.trace.rows.back().digits;
  return out;
}

RationalStep rational_single_step(int k, const MachinFormula& f, int terms, int precision) {
  return rational_single_step(k, f, terms, precision, bootstrap_pi(reference_digits_for(precision)));
}

RationalStep rational_single_step(int k, const MachinFormula& f, int terms, int precision, const MPReal& reference) {
  require_leading(k, f, terms, "rational_single_step");
  RationalStep out;
  out.tangent = exact_tangent(k, f, terms, 10'000'000, "rational_single_step");
  const BigInt scale = BigInt::pow2(k + 1);
  out.sigma1 = compute_c(k, f, terms, precision);
  const MPReal step = MPReal::from_rational(BigRational(BigInt(1)) - out.tangent, precision) / BigInt::pow2(k);
  out.sigma2 = (out.sigma1 + step).with_precision(precision);
  out.before = agreement_digits(times_exact(out.sigma1, scale), reference);
  out.after = agreement_digits(times_exact(out.sigma2, scale), reference);
  return out;
}

std::string trace_to_table(const IterationTrace& trace) {
  std::ostringstream os;
  const std::string rule = "-------------------------------";
  os << trace.before_digits << " digits of π before iteration\n"
     << rule << "\nNumber of terms n | Digits of π\n"
     << rule << '\n';
  for (const TraceRow& r : trace.rows) {
    std::string n = std::to_string(r.n);
    n.resize(std::max<std::size_t>(n.size(), 18), ' ');
    os << n << "| " << r.digits << '\n';
  }
  os << rule << '\n' << trace.after_digits << " digits of π after iteration\n";
  return os.str();
}

std::string trace_to_json(const IterationTrace& trace) {
  nlohmann::json j;
  j["before"] = trace.before_digits;
  j["rows"] = nlohmann::json::array();
  for (const TraceRow& r : trace.rows) j["rows"].push_back({r.n, r.digits});
  j["after"] = trace.after_digits;
  return j.dump();
}

}  // namespace machinpi
