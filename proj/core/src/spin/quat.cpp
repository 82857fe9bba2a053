#include "lcb/spin/quat.hpp"

#include "lcb/error.hpp"

namespace lcb::spin {

Quat::Quat(int n, int sign, std::uint32_t bits) : n_(n), sign_(sign), bits_(bits) {
  if (n < 1 || n > 31) throw DomainError("Quat rank must be in 1..31");
  if (sign != 1 && sign != -1) throw DomainError("Quat sign must be +-1");
  if (bits >> n) throw DomainError("Quat exponent bits out of range");
}

Quat Quat::hat_gen(int n, int j) {
  if (j < 1 || j > n) throw DomainError("ahat index out of range");
  return Quat(n, 1, 1u << (j - 1));
}

Quat Quat::from_exps(int n, int sign, const std::vector<int>& exps) {
  if (static_cast<int>(exps.size()) != n) throw RankMismatch("exponent vector has wrong length");
  std::uint32_t b = 0;
  for (int j = 1; j <= n; ++j) {
    int e = exps[static_cast<std::size_t>(j) - 1];
    if (e != 0 && e != 1) throw DomainError("Quat exponents must be 0 or 1");
    if (e) b |= 1u << (j - 1);
  }
  return Quat(n, sign, b);
}

std::vector<int> Quat::exps() const {
  std::vector<int> e(static_cast<std::size_t>(n_));
  for (int j = 1; j <= n_; ++j) e[static_cast<std::size_t>(j) - 1] = exp(j);
  return e;
}

namespace {

// q * ahat_j: move ahat_j left past the higher factors (only ahat_{j+1}
// anticommutes with it), then merge with ahat_j^{e_j}.
Quat times_hat(const Quat& q, int j) {
  int s = q.sign();
  if (j < q.n() && q.exp(j + 1)) s = -s;
  if (q.exp(j)) s = -s;
  return Quat(q.n(), s, q.bits() ^ (1u << (j - 1)));
}

}  // namespace

Quat quat_mul(const Quat& a, const Quat& b) {
  if (a.n() != b.n()) throw RankMismatch("Quat elements of different rank");
  Quat r(a.n(), a.sign() * b.sign(), a.bits());
  for (int j = 1; j <= b.n(); ++j)
    if (b.exp(j)) r = times_hat(r, j);
  return r;
}

Quat quat_inv(const Quat& q) {
  // Every element squares to +-1.
  Quat sq = quat_mul(q, q);
  return sq.sign() == 1 ? q : -q;
}

Quat conjugate_by_acute_gen(const Quat& q, int j) {
  Quat r(q.n(), q.sign(), 0);
  for (int i = 1; i <= q.n(); ++i) {
    if (!q.exp(i)) continue;
    Quat img = Quat::hat_gen(q.n(), i);
    if (i == j - 1 || i == j + 1) img = -quat_mul(img, Quat::hat_gen(q.n(), j));
    r = quat_mul(r, img);
  }
  return r;
}

std::vector<int> quat_diagonal(const Quat& q) {
  std::vector<int> d(static_cast<std::size_t>(q.n()) + 1);
  for (int i = 1; i <= q.n() + 1; ++i) {
    int e = (i > 1 ? q.exp(i - 1) : 0) + (i <= q.n() ? q.exp(i) : 0);
    d[static_cast<std::size_t>(i) - 1] = e % 2 ? -1 : 1;
  }
  return d;
}

std::string to_string(const Quat& q) {
  std::string out = q.sign() > 0 ? "+" : "-";
  if (q.bits() == 0) return out + "1";
  for (int j = 1; j <= q.n(); ++j)
    if (q.exp(j)) out += "a" + std::to_string(j);
  return out;
}

std::string to_pretty(const Quat& q) {
  std::string out = q.sign() > 0 ? "" : "-";
  if (q.bits() == 0) return out + "1";
  for (int j = 1; j <= q.n(); ++j)
    if (q.exp(j)) out += "â" + std::to_string(j);
  return out;
}

Quat parse_quat(int n, const std::string& text) {
  std::size_t i = 0;
  int sign = 1;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) sign = text[i++] == '-' ? -1 : 1;
  if (text.substr(i) == "1") return Quat(n, sign, 0);
  Quat r(n, sign, 0);
  while (i < text.size()) {
    if (text[i] != 'a') throw DomainError("bad Quat literal: " + text);
    std::size_t j = ++i;
    while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
    if (j == i) throw DomainError("bad Quat literal: " + text);
    r = quat_mul(r, Quat::hat_gen(n, std::stoi(text.substr(i, j - i))));
    i = j;
  }
  return r;
}

std::vector<Quat> all_quats(int n) {
  std::vector<Quat> out;
  for (std::uint32_t b = 0; b < (1u << n); ++b) {
    out.emplace_back(n, 1, b);
    out.emplace_back(n, -1, b);
  }
  return out;
}

}  // namespace lcb::spin
