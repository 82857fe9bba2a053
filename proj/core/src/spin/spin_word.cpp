#include "lcb/spin/spin_word.hpp"

#include <algorithm>

#include "lcb/error.hpp"

namespace lcb::spin {

using coxeter::canonical_reduced_word;
using coxeter::inv;

SignedPermMatrix SignedPermMatrix::identity(int n) {
  return {Permutation::identity(n), std::vector<int>(static_cast<std::size_t>(n) + 1, 1)};
}

int SignedPermMatrix::det() const {
  int d = coxeter::sign(sigma);
  for (int s : signs) d *= s;
  return d;
}

SignedPermMatrix operator*(const SignedPermMatrix& a, const SignedPermMatrix& b) {
  // Row i of AB is a_i times row i^sa of B.
  SignedPermMatrix r{coxeter::compose(a.sigma, b.sigma), a.signs};
  for (int i = 1; i <= a.sigma.size(); ++i)
    r.signs[static_cast<std::size_t>(i) - 1] *= b.signs[static_cast<std::size_t>(a.sigma(i)) - 1];
  return r;
}

std::string to_string(const SignedPermMatrix& p) {
  std::string out = "[";
  for (int i = 1; i <= p.sigma.size(); ++i) {
    if (i > 1) out += ",";
    out += (p.signs[static_cast<std::size_t>(i) - 1] > 0 ? "+" : "-") + std::to_string(p.sigma(i));
  }
  return out + "]";
}

SpinWord SpinWord::acute_gen(int n, int j) { return {Quat::one(n), Permutation::generator(n, j)}; }

SpinWord SpinWord::grave_gen(int n, int j) {
  // grave_j = acute_j^{-1} = -ahat_j acute_j
  return {-Quat::hat_gen(n, j), Permutation::generator(n, j)};
}

Quat conjugate_by_acute(const Quat& q, const Permutation& sigma) {
  auto w = canonical_reduced_word(sigma);
  Quat r = q;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = conjugate_by_acute_gen(r, *it);
  return r;
}

SpinWord mul_acute_gen(const SpinWord& z, int j) {
  Permutation next = coxeter::right_mul_gen(z.sigma, j);
  if (inv(next) > inv(z.sigma)) return {z.q, next};
  // sigma = next a_j, so acute(sigma) acute_j = acute(next) ahat_j.
  return {quat_mul(z.q, conjugate_by_acute(Quat::hat_gen(z.n(), j), next)), next};
}

SpinWord mul_quat(const SpinWord& z, const Quat& r) {
  if (z.n() != r.n()) throw RankMismatch("spin elements of different rank");
  return {quat_mul(z.q, conjugate_by_acute(r, z.sigma)), z.sigma};
}

SpinWord spin_mul(const SpinWord& a, const SpinWord& b) {
  if (a.n() != b.n()) throw RankMismatch("spin elements of different rank");
  SpinWord r = mul_quat(a, b.q);
  for (int j : canonical_reduced_word(b.sigma)) r = mul_acute_gen(r, j);
  return r;
}

SpinWord spin_inv(const SpinWord& z) {
  auto w = canonical_reduced_word(z.sigma);
  SpinWord r = SpinWord::identity(z.n());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = spin_mul(r, SpinWord::grave_gen(z.n(), *it));
  return mul_quat(r, quat_inv(z.q));
}

SpinWord spin_pow_gen(const SpinWord& z, int j, int k) {
  int m = ((k % 8) + 8) % 8;  // acute_j has order 8
  SpinWord r = z;
  for (int i = 0; i < m; ++i) r = mul_acute_gen(r, j);
  return r;
}

SpinWord acute(const Permutation& s) { return {Quat::one(s.n()), s}; }

SpinWord grave(const Permutation& s) {
  SpinWord r = SpinWord::identity(s.n());
  for (int j : canonical_reduced_word(s)) r = spin_mul(r, SpinWord::grave_gen(s.n(), j));
  return r;
}

Quat hat(const Permutation& s) {
  auto w = canonical_reduced_word(s);
  Permutation tail = Permutation::identity(s.n());
  Quat h = Quat::one(s.n());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    int i = *it;
    int delta = tail(i + 1) - tail(i);  // tail is below a_i tail, so delta > 0
    if (delta % 2) h = quat_mul(Quat::hat_gen(s.n(), i), h);
    tail = coxeter::left_mul_gen(i, tail);
  }
  return h;
}

Quat hat_monomial(const Permutation& s) {
  auto m = coxeter::mult_vector(s);
  std::vector<int> e(m.size());
  std::transform(m.begin(), m.end(), e.begin(), [](int v) { return v % 2; });
  return Quat::from_exps(s.n(), 1, e);
}

Quat hat_by_product(const Permutation& s) {
  SpinWord p = spin_mul(acute(s), acute(coxeter::inverse(s)));
  if (p.sigma != Permutation::identity(s.n())) throw Error("hat_by_product: nontrivial permutation part");
  return p.q;
}

SignedPermMatrix pi_so(const SpinWord& z) {
  auto d = quat_diagonal(z.q);
  for (int i = 1; i <= z.sigma.size(); ++i)
    if (coxeter::inv_i(z.sigma, i) % 2) d[static_cast<std::size_t>(i) - 1] *= -1;
  return {z.sigma, d};
}

SpinWord lift(const SignedPermMatrix& p) {
  if (p.det() != 1) throw DomainError("only determinant +1 signed permutations lift to the spin group");
  const int n = p.n();
  std::uint32_t bits = 0;
  int e = 0;
  for (int i = 1; i <= n; ++i) {
    int di = p.signs[static_cast<std::size_t>(i) - 1];
    if (coxeter::inv_i(p.sigma, i) % 2) di = -di;
    if (di < 0) e ^= 1;
    if (e) bits |= 1u << (i - 1);
  }
  return {Quat(n, 1, bits), p.sigma};
}

SpinWord adv_label(const SpinWord& z0) { return {z0.q, Permutation::longest(z0.n())}; }

SpinWord chop_label(const SpinWord& z0) {
  SpinWord qc = spin_mul(z0, spin_inv(grave(z0.sigma)));
  if (qc.sigma != Permutation::identity(z0.n())) throw Error("chop_label: inconsistent quotient");
  return spin_mul(qc, grave(Permutation::longest(z0.n())));
}

std::string to_pretty(const SpinWord& z) {
  return to_pretty(z.q) + " · acute[" + coxeter::to_string(z.sigma) + "]";
}

std::vector<SpinWord> all_spin_words(int n) {
  std::vector<SpinWord> out;
  for (const auto& s : coxeter::all_permutations(n))
    for (const auto& q : all_quats(n)) out.push_back({q, s});
  return out;
}

}  // namespace lcb::spin
