#pragma once

#include <string>
#include <utility>
#include <vector>

// The symmetric group S_{n+1} as the Coxeter group A_n.
//
// Convention: permutations act on the RIGHT, k^(s1 s2) = (k^s1)^s2, so
// compose(s1, s2) applies s1 first. Right multiplication by a_i swaps the
// values i and i+1 in one-line notation; left multiplication swaps the
// positions i and i+1.
namespace lcb::coxeter {

using ReducedWord = std::vector<int>;  // generator indices in 1..n
using MultVector = std::vector<int>;   // mult_1..mult_n

class Permutation {
 public:
  Permutation() = default;
  // images[k-1] = k^sigma; must be a bijection of {1..size}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation longest(int n);  // eta: k -> n+2-k
  static Permutation generator(int n, int i);
  // "2413", "[2,4,1,3]" or "2,4,1,3".
  static Permutation parse(const std::string& text);

  int n() const { return static_cast<int>(images_.size()) - 1; }
  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[static_cast<std::size_t>(k) - 1]; }
  const std::vector<int>& images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.images_ < b.images_; }

 private:
  std::vector<int> images_;
};

// Digits run together when every value is below 10, e.g. "4321".
std::string to_string(const Permutation& s);

Permutation compose(const Permutation& s1, const Permutation& s2);
Permutation inverse(const Permutation& s);
Permutation right_mul_gen(const Permutation& s, int i);  // s a_i
Permutation left_mul_gen(int i, const Permutation& s);   // a_i s
int sign(const Permutation& s);

std::vector<std::pair<int, int>> inversions(const Permutation& s);
int inv(const Permutation& s);
int inv_i(const Permutation& s, int i);

MultVector mult_vector(const Permutation& s);
Permutation perm_from_mult(const MultVector& d);

// Lexicographically smallest reduced word.
ReducedWord canonical_reduced_word(const Permutation& s);
Permutation evaluate_word(int n, const ReducedWord& w);
bool is_reduced(int n, const ReducedWord& w);
std::vector<ReducedWord> all_reduced_words(const Permutation& s);

// Strong (Bruhat) order by rank dominance.
bool bruhat_leq(const Permutation& s0, const Permutation& s1);
// Independent check: s0 is the product of a subexpression of some reduced
// word of s1. Exponential; meant for n <= 4.
bool bruhat_leq_bruteforce(const Permutation& s0, const Permutation& s1);
std::vector<Permutation> covers_below(const Permutation& s1);

bool weak_leq_right(const Permutation& s0, const Permutation& s1);  // Inv(s0) in Inv(s1)
bool weak_leq_left(const Permutation& s0, const Permutation& s1);   // Inv(s0^-1) in Inv(s1^-1)

Permutation vee(const Permutation& s0, const Permutation& s1);

// All of S_{n+1} in lexicographic order of images.
std::vector<Permutation> all_permutations(int n);

}  // namespace lcb::coxeter
