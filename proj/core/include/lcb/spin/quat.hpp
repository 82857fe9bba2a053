#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Quat_{n+1}: signed monomials +-ahat_1^e1 ... ahat_n^en, where
// ahat_j^2 = -1, ahat_i ahat_j = -ahat_j ahat_i for |i-j| = 1 and the
// generators commute otherwise.
namespace lcb::spin {

class Quat {
 public:
  Quat() = default;
  Quat(int n, int sign, std::uint32_t bits);

  static Quat one(int n) { return Quat(n, 1, 0); }
  static Quat hat_gen(int n, int j);  // ahat_j
  static Quat from_exps(int n, int sign, const std::vector<int>& exps);

  int n() const { return n_; }
  int sign() const { return sign_; }
  std::uint32_t bits() const { return bits_; }
  int exp(int j) const { return (bits_ >> (j - 1)) & 1u; }
  std::vector<int> exps() const;

  Quat operator-() const { return Quat(n_, -sign_, bits_); }
  friend bool operator==(const Quat&, const Quat&) = default;
  friend bool operator<(const Quat& a, const Quat& b) {
    return a.bits_ != b.bits_ ? a.bits_ < b.bits_ : a.sign_ < b.sign_;
  }

 private:
  int n_ = 0;
  int sign_ = 1;
  std::uint32_t bits_ = 0;
};

Quat quat_mul(const Quat& a, const Quat& b);
Quat quat_inv(const Quat& q);

// acute_j q acute_j^{-1}.
Quat conjugate_by_acute_gen(const Quat& q, int j);

// Diagonal of Pi(q): entry i is (-1)^(e_{i-1} + e_i), i = 1..n+1.
std::vector<int> quat_diagonal(const Quat& q);

// ASCII form: "+1", "-1", "+a3a6".
std::string to_string(const Quat& q);
// Unicode form: "1", "-1", "â3â6", "-â1â3".
std::string to_pretty(const Quat& q);
Quat parse_quat(int n, const std::string& text);

// All 2^{n+1} elements.
std::vector<Quat> all_quats(int n);

}  // namespace lcb::spin
