#include "machinpi/machin.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "machinpi/radicals.hpp"

namespace machinpi {

BigRational b1k_two_step(const BigInt& A_k, int k) {
  if (k < 2) throw DomainError("b1k_two_step: k must be at least 2");
  if (A_k < BigInt(2)) throw DomainError("b1k_two_step: A_k must be at least 2");
  // u_n = U/D, v_n = V/D with a shared denominator D = (A^2 + 1)^(2^(n-1)).
  const BigInt a2 = A_k * A_k;
  BigInt u = a2 - BigInt(1);
  BigInt v = BigInt(2) * A_k;
  BigInt d = a2 + BigInt(1);
  for (int n = 2; n <= k; ++n) {
    BigInt nu = u * u - v * v;
    v = BigInt(2) * u * v;
    u = std::move(nu);
    d = d * d;
  }
  if (v == d) throw DomainError("b1k_two_step: v_k = 1");
  return BigRational(u, d - v);
}

BigRational eta_general(const BigRational& gamma, const BigInt& phi) {
  if (phi < BigInt(1)) throw DomainError("eta_general: phi must be at least 1");
  const GaussianRational i(BigRational(0), BigRational(1));
  const GaussianRational ratio = GaussianRational(gamma, BigRational(1)) / GaussianRational(gamma, BigRational(-1));
  const GaussianRational denom = gauss_pow(ratio, phi) - i;
  if (denom.is_zero()) throw DomainError("eta_general: pole at gamma = " + gamma.to_string());
  const GaussianRational eta = GaussianRational(BigRational(2)) / denom - i;
  if (!eta.im.is_zero()) throw NumericError("eta_general: nonzero imaginary residue " + eta.im.to_string());
  return eta.re;
}

Expansion expand_formula(int k, int max_M) {
  if (k < 2) throw DomainError("expand_formula: k must be at least 2");
  if (max_M < 0) throw DomainError("expand_formula: max_M must be non-negative");
  Expansion out;
  ExpansionState& st = out.state;
  st.k = k;
  st.A_k = compute_Ak(k);
  auto& terms = out.formula.terms;
  terms.push_back({BigInt::pow2(static_cast<std::uint64_t>(k - 1)), BigRational(st.A_k)});

  BigRational b = b1k_two_step(st.A_k, k);
  st.B_list.push_back(b);
  for (int m = 1;; ++m) {
    if (b.is_integer()) {
      terms.push_back({BigInt(1), b});
      st.terminated = true;
      break;
    }
    if (m == max_M + 1) {
      terms.push_back({BigInt(1), b});
      break;
    }
    const BigRational fl(b.floor());
    terms.push_back({BigInt(1), fl});
    b = (BigRational(1) + fl * b) / (fl - b);
    st.B_list.push_back(b);
  }
  out.formula.provenance = "expand_formula k=" + std::to_string(k) + " max_M=" + std::to_string(max_M) +
                           (st.terminated ? " (terminated)" : "");
  return out;
}

MachinFormula leading_formula(int k, int terms) {
  if (terms < 1) throw DomainError("leading_formula: need at least one term");
  if (terms == 1) {
    MachinFormula f;
    f.terms.push_back({BigInt::pow2(static_cast<std::uint64_t>(k - 1)), BigRational(compute_Ak(k))});
    f.provenance = "leading term k=" + std::to_string(k);
    return f;
  }
  return expand_formula(k, terms - 1).formula;
}

ArctanSplit split_arctan(const BigRational& z) {
  if (z.sign() >= 0 && z < BigRational(1)) {
    throw DomainError("split_arctan: argument " + z.to_string() + " lies in [0, 1)");
  }
  const BigRational fl(z.floor());
  return {fl.num(), (fl - z) / (BigRational(1) + z * fl)};
}

std::vector<ArctanTerm> split_term(const ArctanTerm& term) {
  const ArctanSplit s = split_arctan(term.beta);
  std::vector<ArctanTerm> out{{term.coeff, BigRational(s.floor)}};
  if (!s.residual.is_zero()) out.push_back({term.coeff, s.residual.reciprocal()});
  return out;
}

std::string formula_to_json(const MachinFormula& f) {
  nlohmann::json j;
  j["provenance"] = f.provenance;
  j["terms"] = nlohmann::json::array();
  for (const auto& t : f.terms) {
    j["terms"].push_back({{"coeff", t.coeff.to_string()},
                          {"beta_num", t.beta.num().to_string()},
                          {"beta_den", t.beta.den().to_string()}});
  }
  return j.dump(2);
}

MachinFormula formula_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("formula JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw std::invalid_argument("formula JSON: expected an object with a \"terms\" array");
  }
  MachinFormula f;
  f.provenance = j.value("provenance", "");
  for (const auto& t : j["terms"]) {
    for (const char* key : {"coeff", "beta_num", "beta_den"}) {
      if (!t.contains(key) || !t[key].is_string()) {
        throw std::invalid_argument(std::string("formula JSON: term field \"") + key + "\" must be a decimal string");
      }
    }
    const BigInt den = BigInt::parse(t["beta_den"].get<std::string>());
    if (den.is_zero()) throw std::invalid_argument("formula JSON: beta_den must be nonzero");
    BigRational beta(BigInt::parse(t["beta_num"].get<std::string>()), den);
    if (beta.is_zero()) throw std::invalid_argument("formula JSON: beta must be nonzero");
    f.terms.push_back({BigInt::parse(t["coeff"].get<std::string>()), std::move(beta)});
  }
  return f;
}

void write_formula(const std::filesystem::path& path, const MachinFormula& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << formula_to_json(f) << '\n';
}

MachinFormula read_formula(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return formula_from_json(ss.str());
}

std::string describe(const MachinFormula& f) {
  std::ostringstream os;
  os << "pi/4 =";
  bool first = true;
  for (const auto& t : f.terms) {
    // Fold the sign of beta into the coefficient: arctan(1/-b) = -arctan(1/b).
    BigInt c = t.beta.sign() < 0 ? -t.coeff : t.coeff;
    const BigRational b = t.beta.abs();
    if (first) {
      if (c.sign() < 0) os << " -";
    } else {
      os << (c.sign() < 0 ? " -" : " +");
    }
    first = false;
    c = c.abs();
    os << ' ';
    if (c != BigInt(1)) os << c << ' ';
    if (b.is_integer()) {
      os << "arctan(1/" << b.num() << ')';
    } else {
      os << "arctan(" << b.den() << '/' << b.num() << ')';
    }
  }
  return os.str();
}

}  // namespace machinpi
