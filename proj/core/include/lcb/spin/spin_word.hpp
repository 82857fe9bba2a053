#pragma once

#include <string>

#include "lcb/coxeter/permutation.hpp"
#include "lcb/spin/quat.hpp"
#include "lcb/spin/signed_perm.hpp"

// Elements of the lifted group Btilde^+_{n+1} in the canonical form
// z = q * acute(sigma), where acute(sigma) is the product of acute_j over any
// reduced word of sigma.
namespace lcb::spin {

using coxeter::Permutation;

struct SpinWord {
  Quat q;
  Permutation sigma;

  static SpinWord identity(int n) { return {Quat::one(n), Permutation::identity(n)}; }
  static SpinWord acute_gen(int n, int j);
  static SpinWord grave_gen(int n, int j);
  static SpinWord from_quat(const Quat& q) { return {q, Permutation::identity(q.n())}; }

  int n() const { return sigma.n(); }
  SpinWord operator-() const { return {-q, sigma}; }
  friend bool operator==(const SpinWord&, const SpinWord&) = default;
  friend bool operator<(const SpinWord& a, const SpinWord& b) {
    return a.sigma == b.sigma ? a.q < b.q : a.sigma < b.sigma;
  }
};

// acute(sigma) q acute(sigma)^{-1}
Quat conjugate_by_acute(const Quat& q, const Permutation& sigma);

SpinWord mul_acute_gen(const SpinWord& z, int j);  // z * acute_j
SpinWord mul_quat(const SpinWord& z, const Quat& r);
SpinWord spin_mul(const SpinWord& a, const SpinWord& b);
SpinWord spin_inv(const SpinWord& z);
// z * acute_j^k, k of either sign.
SpinWord spin_pow_gen(const SpinWord& z, int j, int k);

SpinWord acute(const Permutation& s);
SpinWord grave(const Permutation& s);
// hat(s) = acute(s) grave(s)^{-1}, via the one-step recursion along the
// canonical word.
Quat hat(const Permutation& s);
// Monomial part only, from the parities of mult(s); the sign is +.
Quat hat_monomial(const Permutation& s);
// hat as the literal product acute(s) acute(s^{-1}); a cross-check.
Quat hat_by_product(const Permutation& s);

SignedPermMatrix pi_so(const SpinWord& z);
// The preimage of P with positive Quat sign (the other one is its negative).
SpinWord lift(const SignedPermMatrix& p);

SpinWord adv_label(const SpinWord& z0);
SpinWord chop_label(const SpinWord& z0);

// "-â1â3 · acute[3214]"
std::string to_pretty(const SpinWord& z);

std::vector<SpinWord> all_spin_words(int n);

}  // namespace lcb::spin
