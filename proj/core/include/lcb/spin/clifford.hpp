#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "lcb/linalg/scalar.hpp"
#include "lcb/spin/spin_word.hpp"

// Even Clifford algebra Cl^0_{n+1} with e_i^2 = -1, coefficients in Z[1/sqrt2].
// Used only as an independent oracle for the canonical-form arithmetic.
namespace lcb::spin {

inline constexpr int kCliffordMaxRank = 10;

struct CliffordElem {
  int n = 0;
  // Blade bitmask over e_1..e_{n+1} (bit 0 is e_1) -> coefficient.
  std::map<std::uint32_t, linalg::Root2> coeffs;

  static CliffordElem scalar(int n, const linalg::Root2& c);
  static CliffordElem one(int n) { return scalar(n, linalg::Root2(1)); }
  // ahat_j = e_{j+1} e_j
  static CliffordElem hat_gen(int n, int j);

  friend bool operator==(const CliffordElem&, const CliffordElem&) = default;
};

CliffordElem clifford_mul(const CliffordElem& a, const CliffordElem& b);
CliffordElem clifford_add(const CliffordElem& a, const CliffordElem& b);
CliffordElem clifford_from_quat(const Quat& q);
CliffordElem clifford_from_spinword(const SpinWord& z);
std::string to_string(const CliffordElem& c);

}  // namespace lcb::spin
