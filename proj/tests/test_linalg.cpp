#include <cmath>
#include <numbers>

#include "doctest.h"
#include "lcb/error.hpp"
#include "lcb/linalg/exterior.hpp"
#include "lcb/linalg/generators.hpp"
#include "lcb/spin/spin_word.hpp"
#include "lcb/curves/curves.hpp"
#include "support.hpp"

using namespace lcb;
using namespace lcb::linalg;

namespace {

RMatrix random_lower(testing::Rng& rng, int n) {
  RMatrix l = RMatrix::identity(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j < i; ++j) {
      l(i, j) = Rational(testing::uniform_int(rng, -9, 9), testing::uniform_int(rng, 1, 5));
      l(i, j).canonicalize();
    }
  return l;
}

// Cofactor expansion along the first row, independent of the subset DP.
Rational cofactor_det(const RMatrix& m) {
  const std::size_t k = m.rows();
  if (k == 0) return 1;
  Rational d = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<int> rows, cols;
    for (std::size_t r = 1; r < k; ++r) rows.push_back(static_cast<int>(r));
    for (std::size_t c2 = 0; c2 < k; ++c2)
      if (c2 != c) cols.push_back(static_cast<int>(c2));
    Rational term = m(0, c) * cofactor_det(m.submatrix(rows, cols));
    d += c % 2 ? Rational(-term) : term;
  }
  return d;
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK(parse_rational("7") == 7);
  CHECK(to_string(parse_rational("-2/4")) == "-1/2");
  CHECK_THROWS_AS(parse_rational("x"), DomainError);
  CHECK(to_string(0.1 + 0.2) == "0.3");
}

TEST_CASE("Root2") {
  Root2 s = Root2::sqrt2();
  CHECK(s * s == Root2(2));
  CHECK(Root2::inv_sqrt2() * Root2::inv_sqrt2() == Root2(1, 0, 1));
  CHECK(to_string(Root2(1, 1, 1)) == "(1+r2)/2^1");
  CHECK(to_string(Root2(3)) == "3");
  CHECK(to_string(Root2::sqrt2()) == "r2");
  CHECK(parse_root2(to_string(Root2(-3, 5, 2))) == Root2(-3, 5, 2));
  CHECK(Root2(2, 2, 1) == Root2(1, 1, 0));
  CHECK(std::abs(Root2(1, 1, 1).to_double() - (1 + std::sqrt(2.0)) / 2) < 1e-15);
}

TEST_CASE("polynomials") {
  Poly t = Poly::variable();
  Poly p = 3 * t * t + t * t * t;
  CHECK(root_multiplicity_at_zero(p) == 2);
  CHECK(root_multiplicity_at_zero(Poly(1)) == 0);
  CHECK_THROWS(root_multiplicity_at_zero(Poly()));
  CHECK(p.derivative() == 6 * t + 3 * t * t);
  CHECK(p.eval(Rational(2)) == 20);
  CHECK((t + 1) * (t - 1) == t * t - 1);
}

TEST_CASE("determinant and inverse") {
  auto m = RMatrix::from_rows({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  CHECK(determinant(m) == 18);
  testing::Rng rng(51);
  for (int k = 0; k < 50; ++k) {
    auto l = random_lower(rng, testing::uniform_int(rng, 1, 5));
    auto a = l * l.transpose();
    CHECK(determinant(a) == cofactor_det(a));
    CHECK(inverse_lower_unitriangular(l) * l == RMatrix::identity(l.rows()));
  }
}

TEST_CASE("exterior powers") {
  CHECK(exterior_power(RMatrix::identity(4), 2) == RMatrix::identity(6));
  auto lam = exterior_power(lambda<Rational>(3, 2, Rational(5)), 1);
  CHECK(lam(2, 1) == 5);
  CHECK(index_sets(4, 2).size() == 6);
  CHECK(index_sets(4, 2).front() == IndexSet{{1, 2}});
  CHECK(arrow_step(IndexSet{{2}}, 1) == IndexSet{{1}});
  CHECK_FALSE(arrow_step(IndexSet{{1, 2}}, 1));
  testing::Rng rng(52);
  for (int k = 0; k < 50; ++k) {
    int n = testing::uniform_int(rng, 1, 5);
    auto a = random_lower(rng, n), b = random_lower(rng, n);
    int deg = testing::uniform_int(rng, 1, n + 1);
    CHECK(exterior_power(a * b, deg) == exterior_power(a, deg) * exterior_power(b, deg));
  }
}

TEST_CASE("nilpotent exponentials") {
  for (int j = 1; j <= 3; ++j) {
    auto l = frak_l<Rational>(3, j);
    CHECK(nilpotent_exp(Rational(7) * l) == RMatrix::identity(4) + Rational(7) * l);
  }
  auto e = nilpotent_exp(Poly::variable() * frak_n<Poly>(4));
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= i; ++j) {
      Rational f = 1;
      for (int k = 2; k <= i - j; ++k) f *= k;
      CHECK(e(i, j) == Poly::monomial(1 / f, i - j));
    }
}

TEST_CASE("charts") {
  CHECK(lu_chart(FMatrix::identity(3)) == FMatrix::identity(3));
  for (int n = 1; n <= 5; ++n) {
    auto hl = frak_hL(n);
    for (double t : {0.1, 0.5, 2.0}) {
      auto q = qr_chart(matrix_exp_float(t * hl));
      CHECK(max_abs_diff(q, matrix_exp_float(std::atan(t) * frak_h(n))) < 1e-9);
    }
    auto quarter = matrix_exp_float(std::numbers::pi / 2 * frak_h(n));
    CHECK(max_abs_diff(quarter, spin::pi_so(spin::acute(coxeter::Permutation::longest(n))).matrix<double>()) < 1e-9);
  }
  CHECK_THROWS_AS(lu_chart(spin::pi_so(spin::acute(coxeter::Permutation::longest(2))).matrix<double>()),
                  ChartDomainError);
}

TEST_CASE("property: QR then LU recovers L") {
  testing::Rng rng(53);
  for (int k = 0; k < 1000; ++k) {
    int n = testing::uniform_int(rng, 1, 6);
    auto l = to_float(random_lower(rng, n));
    auto q = qr_chart(l);
    CHECK(orthogonality_defect(q) < 1e-12);
    CHECK(max_abs_diff(lu_chart(q), l) < 1e-9);
  }
}

TEST_CASE("property: dense helpers") {
  testing::Rng rng(54);
  for (int k = 0; k < 200; ++k) {
    auto size = static_cast<std::size_t>(testing::uniform_int(rng, 2, 7));
    auto a = testing::random_matrix(rng, size);
    auto qr = qr_factor(a);
    CHECK(max_abs_diff(qr.Q * qr.R, a) < 1e-10);
    for (std::size_t i = 0; i < size; ++i) CHECK(qr.R(i, i) > 0);
    CHECK(max_abs_diff(inverse(a) * a, FMatrix::identity(size)) < 1e-8);
    auto u = testing::random_upper_positive(rng, size);
    CHECK(max_abs_diff(inverse_upper(u) * u, FMatrix::identity(size)) < 1e-10);
    auto skew = a - a.transpose();
    CHECK(orthogonality_defect(matrix_exp_float(skew)) < 1e-12);
  }
}

TEST_CASE("vandert determinant") {
  auto m = curves::vandert_matrix({0, 1, 3});
  auto d = determinant(m);
  CHECK(root_multiplicity_at_zero(d) == 1);
  CHECK(d.degree() == 1);
  // mu = sum d_i - k(k-1)/2 in general.
  testing::Rng rng(55);
  for (int k = 0; k < 30; ++k) {
    std::vector<int> ds;
    int size = testing::uniform_int(rng, 1, 4), sum = 0;
    for (int i = 0, v = testing::uniform_int(rng, 0, 2); i < size; ++i, v += testing::uniform_int(rng, 1, 3)) {
      ds.push_back(v);
      sum += v;
    }
    auto det = determinant(curves::vandert_matrix(ds));
    REQUIRE_FALSE(det.is_zero());
    CHECK(root_multiplicity_at_zero(det) == sum - size * (size - 1) / 2);
    CHECK(det.degree() == sum - size * (size - 1) / 2);
  }
}
