#include <algorithm>
#include <set>

#include "doctest.h"
#include "lcb/coxeter/permutation.hpp"
#include "lcb/error.hpp"
#include "support.hpp"

using namespace lcb;
using namespace lcb::coxeter;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

// Inversion table straight from the definition.
std::set<std::pair<int, int>> brute_inversions(const Permutation& s) {
  std::set<std::pair<int, int>> out;
  for (int i = 1; i <= s.size(); ++i)
    for (int j = i + 1; j <= s.size(); ++j)
      if (s(i) > s(j)) out.insert({i, j});
  return out;
}

}  // namespace

TEST_CASE("parse and print") {
  CHECK(to_string(P("2413")) == "2413");
  CHECK(P("[2,4,1,3]") == P("2413"));
  CHECK(P("2,4,1,3") == P("2413"));
  CHECK(to_string(Permutation::identity(9)) == "1,2,3,4,5,6,7,8,9,10");
  CHECK_THROWS_AS(P("2213"), DomainError);
  CHECK_THROWS_AS(P(""), DomainError);
}

TEST_CASE("composition") {
  CHECK(compose(Permutation::generator(2, 1), Permutation::generator(2, 2)) == P("312"));
  auto s = P("35142");
  CHECK(compose(s, Permutation::identity(4)) == s);
  CHECK(compose(Permutation::identity(4), s) == s);
  CHECK_THROWS_AS(compose(s, Permutation::identity(3)), RankMismatch);
}

TEST_CASE("inverse against the image table") {
  auto s = P("2431");
  std::vector<int> inv_images(4);
  for (int k = 1; k <= 4; ++k) inv_images[static_cast<std::size_t>(s(k)) - 1] = k;
  CHECK(inverse(s) == Permutation(inv_images));
  CHECK(inverse(s) == P("4132"));
}

TEST_CASE("inversion counts") {
  CHECK(inv(Permutation::longest(3)) == 6);
  CHECK(inv(Permutation::identity(5)) == 0);
  CHECK(inv(P("612345")) == 5);
  CHECK(mult_vector(P("432156")) == MultVector{3, 4, 3, 0, 0});
  CHECK(mult_vector(P("7123456")) == MultVector{6, 5, 4, 3, 2, 1});
  CHECK(mult_vector(Permutation::identity(4)) == MultVector{0, 0, 0, 0});
}

TEST_CASE("words") {
  CHECK(evaluate_word(4, {1, 2, 3, 4, 3, 2, 1}) == P("52341"));
  CHECK(evaluate_word(4, {}) == Permutation::identity(4));
  CHECK(is_reduced(8, {1, 3, 4, 5, 4, 3, 2, 1, 6, 5, 7, 6, 5, 4, 3, 8, 7, 6, 5}));
  CHECK_FALSE(is_reduced(3, {1, 1}));
  CHECK(canonical_reduced_word(Permutation::longest(2)) == ReducedWord{1, 2, 1});
  CHECK(canonical_reduced_word(Permutation::identity(3)).empty());
  CHECK_THROWS_AS(evaluate_word(3, {4}), DomainError);
}

TEST_CASE("canonical word is the lexicographic minimum") {
  for (const auto& s : all_permutations(3)) {
    auto words = all_reduced_words(s);
    REQUIRE(!words.empty());
    CHECK(canonical_reduced_word(s) == *std::min_element(words.begin(), words.end()));
    for (const auto& w : words) CHECK(evaluate_word(3, w) == s);
  }
}

TEST_CASE("Bruhat order") {
  CHECK(bruhat_leq(P("2143"), P("4123")));
  for (const auto& s : all_permutations(3)) CHECK(bruhat_leq(Permutation::identity(3), s));
  auto all = all_permutations(2);
  for (const auto& a : all)
    for (const auto& b : all) CHECK(bruhat_leq(a, b) == bruhat_leq_bruteforce(a, b));
}

TEST_CASE("covers raise inv by one") {
  for (const auto& s : all_permutations(3))
    for (const auto& c : covers_below(s)) {
      CHECK(inv(c) + 1 == inv(s));
      CHECK(bruhat_leq(c, s));
    }
  CHECK(covers_below(Permutation::identity(3)).empty());
}

TEST_CASE("weak orders") {
  CHECK_FALSE(weak_leq_left(P("2143"), P("4123")));
  CHECK_FALSE(weak_leq_right(P("2143"), P("4123")));
  for (const auto& s : all_permutations(3)) {
    CHECK(weak_leq_left(s, s));
    CHECK(weak_leq_right(s, s));
  }
}

TEST_CASE("vee") {
  CHECK(vee(P("2413"), P("2431")) == Permutation::longest(3));
  auto all = all_permutations(3);
  for (const auto& s : all) {
    CHECK(vee(s, Permutation::identity(3)) == s);
    CHECK(vee(Permutation::longest(3), s) == Permutation::longest(3));
  }
  // Both weak-order conditions hold, and vee is the Bruhat maximum of all
  // products u v with u <= a, v <= b.
  for (const auto& a : all)
    for (const auto& b : all) {
      auto v = vee(a, b);
      CHECK(weak_leq_right(a, v));
      CHECK(weak_leq_left(b, v));
      for (const auto& u : all)
        for (const auto& w : all)
          if (bruhat_leq(u, a) && bruhat_leq(w, b)) CHECK(bruhat_leq(compose(u, w), v));
    }
}

TEST_CASE("vee does not depend on the reduced word of the right factor") {
  testing::Rng rng(23);
  for (int k = 0; k < 200; ++k) {
    int n = testing::uniform_int(rng, 1, 5);
    auto a = testing::random_perm(rng, n), b = testing::random_perm(rng, n);
    Permutation v = a;
    for (int i : testing::random_word_of(rng, b))
      if (inv(right_mul_gen(v, i)) > inv(v)) v = right_mul_gen(v, i);
    CHECK(v == vee(a, b));
  }
}

TEST_CASE("property: inversions match the definition") {
  testing::Rng rng(21);
  for (int k = 0; k < 300; ++k) {
    auto s = testing::random_perm(rng, testing::uniform_int(rng, 1, 7));
    auto list = inversions(s);
    CHECK(std::set<std::pair<int, int>>(list.begin(), list.end()) == brute_inversions(s));
    CHECK(inv(s) == static_cast<int>(list.size()));
    CHECK(inv(s) == inv(inverse(s)));
    CHECK(sign(s) == (inv(s) % 2 ? -1 : 1));
  }
}

TEST_CASE("property: words, lengths and multiplicities") {
  testing::Rng rng(22);
  for (int k = 0; k < 300; ++k) {
    int n = testing::uniform_int(rng, 1, 7);
    auto s = testing::random_perm(rng, n);
    auto w = canonical_reduced_word(s);
    CHECK(static_cast<int>(w.size()) == inv(s));
    CHECK(evaluate_word(n, w) == s);
    CHECK(is_reduced(n, w));
    CHECK(perm_from_mult(mult_vector(s)) == s);
    auto t = testing::random_perm(rng, n);
    CHECK(inv(compose(s, t)) <= inv(s) + inv(t));
    CHECK(compose(compose(s, t), inverse(t)) == s);
    for (int i = 1; i <= n; ++i) {
      CHECK(right_mul_gen(s, i) == compose(s, Permutation::generator(n, i)));
      CHECK(left_mul_gen(i, s) == compose(Permutation::generator(n, i), s));
      CHECK(std::abs(inv(right_mul_gen(s, i)) - inv(s)) == 1);
    }
  }
}
