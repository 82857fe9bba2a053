#include "doctest.h"
#include "lcb/error.hpp"
#include "lcb/linalg/exterior.hpp"
#include "lcb/linalg/generators.hpp"
#include "lcb/totpos/totpos.hpp"
#include "support.hpp"

using namespace lcb;
using namespace lcb::totpos;
using coxeter::Permutation;
using linalg::Poly;

namespace {

RMatrix L3(const Rational& x, const Rational& y, const Rational& z) {
  return RMatrix::from_rows({{1, 0, 0}, {x, 1, 0}, {z, y, 1}});
}

Rational Q(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("small positive strata") {
  CHECK(pos_from_params(2, {{1, 2}, {2, 3}}) == L3(2, 3, 0));
  CHECK(pos_from_params(2, {{2, 1}, {3, 2}}) == L3(2, 3, 6));
  CHECK(pos_from_params(3, {{}, {}}) == RMatrix::identity(4));
  CHECK(pos_membership(L3(2, 3, 5), Permutation::longest(2)));
  CHECK_FALSE(pos_membership(L3(2, 3, 6), Permutation::longest(2)));
  CHECK(pos_membership(L3(2, 3, 6), Permutation::parse("231")));
  CHECK(pos_membership(RMatrix::identity(4), Permutation::identity(3)));
  CHECK(neg_membership(L3(-2, -3, 5), Permutation::longest(2)));
  CHECK_THROWS_AS(pos_from_params(2, {{1}, {}}), DomainError);
}

TEST_CASE("ababab transition") {
  auto s = ababab_transition(1, 1, 1);
  CHECK(s.s1 == Q(1, 2));
  CHECK(s.s2 == 2);
  CHECK(s.s3 == Q(1, 2));
  auto z = ababab_transition(7, 0, 5);
  CHECK(z.s1 == 0);
  CHECK(z.s2 == 12);
  CHECK(z.s3 == 0);
  testing::Rng rng(61);
  for (int k = 0; k < 100; ++k) {
    Rational a = testing::random_positive(rng), b = testing::random_positive(rng), c = testing::random_positive(rng);
    auto t = ababab_transition(a, b, c);
    CHECK(pos_from_params(2, {{1, 2, 1}, {a, b, c}}) == pos_from_params(2, {{2, 1, 2}, {t.s1, t.s2, t.s3}}));
    CHECK(t.s1 > 0);
    CHECK(t.s2 > 0);
    CHECK(t.s3 > 0);
  }
}

TEST_CASE("arrow paths") {
  CHECK(path_exists(IndexSet{{2, 3}}, IndexSet{{2, 3}}, Permutation::identity(2)));
  CHECK(path_exists(IndexSet{{2}}, IndexSet{{1}}, Permutation::generator(2, 1)));
  CHECK_FALSE(path_exists(IndexSet{{3}}, IndexSet{{1}}, Permutation::generator(2, 1)));
  CHECK(path_exists(IndexSet{{3}}, IndexSet{{1}}, Permutation::parse("231")));
  CHECK_FALSE(path_exists(IndexSet{{3}}, IndexSet{{1}}, Permutation::parse("312")));
}

TEST_CASE("paths decide which minors are positive, n = 3") {
  testing::Rng rng(62);
  for (const auto& s : coxeter::all_permutations(3)) {
    auto l = pos_from_params(3, testing::random_params(rng, testing::random_word_of(rng, s)));
    for (const auto& m : lower_minor_indices(3)) {
      auto v = linalg::minor(l, m.rows, m.cols);
      CHECK(v >= 0);
      CHECK((v > 0) == path_exists(m.rows, m.cols, s));
    }
  }
}

TEST_CASE("factorization") {
  CHECK(pos_factorize(L3(2, 3, 0), {1, 2}) == std::vector<Rational>{2, 3});
  CHECK(pos_factorize(RMatrix::identity(3), {}).empty());
  CHECK_THROWS_AS(pos_factorize(L3(2, 3, 6), {1, 2}), DomainError);
  CHECK_THROWS_AS(pos_factorize(L3(2, 3, 0), {1, 1}), DomainError);
}

TEST_CASE("orders") {
  auto eta = pos_from_params(2, {{1, 2, 1}, {1, 1, 1}});
  auto id = RMatrix::identity(3);
  CHECK(ll(id, eta));
  CHECK(leq(id, id));
  CHECK_FALSE(ll(id, id));
  CHECK(cell_of_closure(id) == PosCellLabel{Permutation::identity(2), true});
  testing::Rng rng(63);
  for (int k = 0; k < 100; ++k) {
    int n = testing::uniform_int(rng, 1, 3);
    auto l0 = pos_from_params(n, testing::random_params(rng, testing::random_reduced_word(rng, n)));
    auto l1 = l0 * pos_from_params(n, testing::random_params(rng, testing::random_reduced_word(rng, n)));
    auto w = coxeter::canonical_reduced_word(Permutation::longest(n));
    auto l2 = l1 * pos_from_params(n, testing::random_params(rng, w));
    CHECK(leq(l0, l1));
    CHECK(ll(l1, l2));
    CHECK(ll(l0, l2));
  }
}

TEST_CASE("property: closure cell and round trip") {
  testing::Rng rng(64);
  for (int k = 0; k < 1000; ++k) {
    int n = testing::uniform_int(rng, 1, 4);
    auto p = testing::random_params(rng, testing::random_reduced_word(rng, n));
    auto l = pos_from_params(n, p);
    auto sigma = coxeter::evaluate_word(n, p.word);
    CHECK(cell_of_closure(l) == PosCellLabel{sigma, true});
    // I lies in both closures and is reported as positive.
    CHECK(cell_of_closure(neg_mirror(l)) == PosCellLabel{sigma, p.word.empty()});
    CHECK(pos_factorize(l, p.word) == p.times);
  }
}

TEST_CASE("property: the speed minor starts at zero with positive slope") {
  testing::Rng rng(65);
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : coxeter::all_permutations(n)) {
      if (s == Permutation::longest(n)) {
        CHECK_THROWS_AS(positive_speed_minor(s), DomainError);
        continue;
      }
      auto sm = positive_speed_minor(s);
      auto l = pos_from_params(n, testing::random_params(rng, testing::random_word_of(rng, s)));
      CHECK(linalg::minor(l, sm.i0, sm.i1) > 0);
      auto lp = l.map<Poly>([](const Rational& q) { return Poly(q); });
      auto curve = lp * linalg::nilpotent_exp(Poly::variable() * linalg::frak_n<Poly>(n));
      auto g = linalg::minor(curve, sm.i0, sm.i2);
      CHECK(g.coeff(0) == 0);
      CHECK(g.coeff(1) > 0);
    }
}
