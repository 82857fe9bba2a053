#include "lcb/spin/clifford.hpp"

#include "lcb/error.hpp"

namespace lcb::spin {

using linalg::Root2;

namespace {

void check_rank(int n) {
  if (n < 1 || n > kCliffordMaxRank) throw DomainError("Clifford oracle supports 1 <= n <= 10");
}

// e_A e_B = sign * e_{A xor B}
int blade_sign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  for (std::uint32_t rest = b; rest; rest &= rest - 1) {
    std::uint32_t low = rest & (~rest + 1);
    swaps += __builtin_popcount(a & ~((low << 1) - 1));  // elements of A above this one
  }
  swaps += __builtin_popcount(a & b);  // each e_i^2 = -1
  return swaps % 2 ? -1 : 1;
}

void accumulate(CliffordElem& c, std::uint32_t blade, const Root2& v) {
  auto it = c.coeffs.find(blade);
  if (it == c.coeffs.end()) {
    if (!v.is_zero()) c.coeffs.emplace(blade, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) c.coeffs.erase(it);
}

}  // namespace

CliffordElem CliffordElem::scalar(int n, const Root2& c) {
  check_rank(n);
  CliffordElem e{n, {}};
  if (!c.is_zero()) e.coeffs.emplace(0u, c);
  return e;
}

CliffordElem CliffordElem::hat_gen(int n, int j) {
  check_rank(n);
  if (j < 1 || j > n) throw DomainError("ahat index out of range");
  // e_{j+1} e_j = -e_j e_{j+1}
  CliffordElem e{n, {}};
  e.coeffs.emplace((1u << (j - 1)) | (1u << j), Root2(-1));
  return e;
}

CliffordElem clifford_mul(const CliffordElem& a, const CliffordElem& b) {
  if (a.n != b.n) throw RankMismatch("Clifford elements of different rank");
  CliffordElem r{a.n, {}};
  for (const auto& [ba, ca] : a.coeffs)
    for (const auto& [bb, cb] : b.coeffs) {
      Root2 v = ca * cb;
      accumulate(r, ba ^ bb, blade_sign(ba, bb) > 0 ? v : -v);
    }
  return r;
}

CliffordElem clifford_add(const CliffordElem& a, const CliffordElem& b) {
  if (a.n != b.n) throw RankMismatch("Clifford elements of different rank");
  CliffordElem r = a;
  for (const auto& [bb, cb] : b.coeffs) accumulate(r, bb, cb);
  return r;
}

CliffordElem clifford_from_quat(const Quat& q) {
  CliffordElem r = CliffordElem::scalar(q.n(), Root2(q.sign()));
  for (int j = 1; j <= q.n(); ++j)
    if (q.exp(j)) r = clifford_mul(r, CliffordElem::hat_gen(q.n(), j));
  return r;
}

CliffordElem clifford_from_spinword(const SpinWord& z) {
  const int n = z.n();
  CliffordElem r = clifford_from_quat(z.q);
  for (int j : coxeter::canonical_reduced_word(z.sigma)) {
    // acute_j = (1 + ahat_j) / sqrt2
    CliffordElem g = clifford_add(CliffordElem::one(n), CliffordElem::hat_gen(n, j));
    g = clifford_mul(g, CliffordElem::scalar(n, Root2::inv_sqrt2()));
    r = clifford_mul(r, g);
  }
  return r;
}

std::string to_string(const CliffordElem& c) {
  if (c.coeffs.empty()) return "0";
  std::string out;
  for (const auto& [blade, v] : c.coeffs) {
    if (!out.empty()) out += " + ";
    out += linalg::to_string(v);
    for (int i = 0; i <= c.n; ++i)
      if (blade & (1u << i)) out += "*e" + std::to_string(i + 1);
  }
  return out;
}

}  // namespace lcb::spin
