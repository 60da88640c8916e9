#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "machinpi/machin.hpp"

namespace fixtures {

inline machinpi::MachinFormula formula(std::initializer_list<std::pair<long, const char*>> terms,
                                       std::string name = "") {
  machinpi::MachinFormula f;
  for (const auto& [c, b] : terms) f.terms.push_back({machinpi::BigInt(c), machinpi::BigRational::parse(b)});
  f.provenance = std::move(name);
  return f;
}

inline machinpi::MachinFormula machin() { return formula({{4, "5"}, {-1, "239"}}, "Machin"); }
inline machinpi::MachinFormula gauss() { return formula({{12, "18"}, {8, "57"}, {-5, "239"}}, "Gauss"); }
inline machinpi::MachinFormula takano() {
  return formula({{12, "49"}, {32, "57"}, {-5, "239"}, {12, "110443"}}, "Takano");
}
inline machinpi::MachinFormula stormer() {
  return formula({{44, "57"}, {7, "239"}, {-12, "682"}, {24, "12943"}}, "Stormer");
}
inline machinpi::MachinFormula seven_term_a() {
  return formula({{83, "107"},
                  {17, "1710"},
                  {-22, "103697"},
                  {-24, "2513489"},
                  {-44, "18280007883"},
                  {12, "7939642926390344818"},
                  {22, "3054211727257704725384731479018"}},
                 "seven-term A");
}
// Third beta is 103697; the printed 103097 breaks the product relation.
inline machinpi::MachinFormula seven_term_b() {
  return formula({{83, "107"},
                  {17, "1710"},
                  {-22, "103697"},
                  {-12, "1256744"},
                  {-22, "9140003941"},
                  {12, "3158812219818"},
                  {22, "167079344092131066905"}},
                 "seven-term B");
}

inline constexpr const char* kB64 =
    "-117573868168175352930277752844194126767991915008537018836932014293678271636885792397";

// k = 4 formula with every beta written out.
inline machinpi::MachinFormula seven_term_k4() {
  return formula({{8, "10"},
                  {1, "-84"},
                  {1, "-21342"},
                  {1, "-991268848"},
                  {1, "-193018008592515208050"},
                  {1, "-197967899896401851763240424238758988350338"},
                  {1, kB64}},
                 "k=4");
}

}  // namespace fixtures
