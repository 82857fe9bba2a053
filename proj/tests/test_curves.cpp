#include <cmath>
#include <numbers>

#include "doctest.h"
#include "lcb/curves/curves.hpp"
#include "lcb/error.hpp"
#include "lcb/linalg/generators.hpp"
#include "support.hpp"

using namespace lcb;
using namespace lcb::curves;
using linalg::max_abs_diff;

namespace {

constexpr double kPi = std::numbers::pi;

FMatrix mat(const spin::SpinWord& z) { return spin::pi_so(z).matrix<double>(); }

ConvexCurveSpec random_piecewise(testing::Rng& rng, int n, int pieces) {
  std::vector<Rational> grid{Rational(testing::uniform_int(rng, -3, 0))};
  std::vector<std::vector<Rational>> kappas;
  for (int m = 0; m < pieces; ++m) {
    grid.push_back(grid.back() + testing::random_positive(rng));
    std::vector<Rational> k;
    for (int i = 0; i < n; ++i) k.push_back(testing::random_positive(rng));
    kappas.push_back(k);
  }
  return ConvexCurveSpec::piecewise(n, grid, kappas);
}

RMatrix eval(const PMatrix& p, const Rational& t) {
  return p.map<Rational>([&](const Poly& x) { return x.eval(t); });
}

}  // namespace

TEST_CASE("single interval with unit curvatures is exp(t n)") {
  for (int n = 1; n <= 4; ++n) {
    auto spec = ConvexCurveSpec::piecewise(n, {0, 2}, {std::vector<Rational>(n, Rational(1))});
    auto id = RMatrix::identity(static_cast<std::size_t>(n) + 1);
    for (Rational t : {Rational(0), Rational(1, 3), Rational(2)})
      CHECK(integrate_convex_exact(spec, id, 0, t) == linalg::nilpotent_exp(t * linalg::frak_n<Rational>(n)));
  }
}

TEST_CASE("zero time step is the identity") {
  testing::Rng rng(81);
  auto spec = random_piecewise(rng, 3, 3);
  auto l0 = totpos::pos_from_params(3, testing::random_params(rng, testing::random_reduced_word(rng, 3)));
  CHECK(integrate_convex_exact(spec, l0, spec.grid[1], spec.grid[1]) == l0);
}

TEST_CASE("minors agree with the explicit path sum") {
  testing::Rng rng(82);
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k < 5; ++k) {
      auto spec = random_piecewise(rng, n, 3);
      const Rational t0 = spec.grid.front(), t1 = spec.grid.back();
      auto id = RMatrix::identity(static_cast<std::size_t>(n) + 1);
      auto g = integrate_convex_exact(spec, id, t0, t1);
      for (const auto& m : totpos::lower_minor_indices(n))
        CHECK(linalg::minor(g, m.rows, m.cols) == explicit_path_sum(spec, t0, t1, m.rows, m.cols));
    }
}

TEST_CASE("symbolic integration matches the exact one on the last interval") {
  testing::Rng rng(83);
  for (int n = 1; n <= 3; ++n) {
    auto spec = random_piecewise(rng, n, 3);
    auto id = RMatrix::identity(static_cast<std::size_t>(n) + 1);
    auto p = integrate_convex_symbolic(spec, id, spec.grid.front());
    const Rational a = spec.grid[spec.grid.size() - 2], b = spec.grid.back();
    for (Rational t : {a, Rational((a + b) / 2), b})
      CHECK(eval(p, t) == integrate_convex_exact(spec, id, spec.grid.front(), t));
  }
}

TEST_CASE("exact integral lies in Pos_eta") {
  testing::Rng rng(84);
  for (int n = 1; n <= 3; ++n) {
    auto spec = random_piecewise(rng, n, 2);
    auto id = RMatrix::identity(static_cast<std::size_t>(n) + 1);
    auto g = integrate_convex_exact(spec, id, spec.grid.front(), spec.grid.back());
    CHECK(totpos::pos_membership(g, Permutation::longest(n)));
  }
}

TEST_CASE("h-curve closed form") {
  for (int n = 1; n <= 5; ++n) {
    CurveEvaluator ev(ConvexCurveSpec::h_curve(n));
    auto eta = Permutation::longest(n);
    CHECK(max_abs_diff(ev.at(kPi / 2), mat(spin::acute(eta))) < 1e-10);
    // Gamma(pi) = (-1)^n I
    auto sign = (n % 2 ? -1.0 : 1.0) * FMatrix::identity(static_cast<std::size_t>(n) + 1);
    CHECK(max_abs_diff(ev.at(kPi), sign) < 1e-10);
    for (double t : {0.3, 0.7, 1.2})
      CHECK(max_abs_diff(linalg::lu_chart(ev.at(t)), linalg::matrix_exp_float(std::tan(t) * linalg::frak_hL(n))) <
            1e-9);
  }
}

TEST_CASE("numeric integration stays on the curve") {
  testing::Rng rng(85);
  auto spec = random_piecewise(rng, 3, 2);
  CurveEvaluator ev(spec);
  auto samples = integrate_lc_numeric(spec, ev.t_min(), ev.t_max(), 1e-3);
  REQUIRE(samples.size() > 2);
  for (const auto& [t, q] : samples) {
    CHECK(linalg::orthogonality_defect(q) < 1e-10);
    CHECK(max_abs_diff(q, ev.at(t)) < 1e-6);
  }
}

TEST_CASE("taylor data matches evaluation") {
  for (auto spec : {ConvexCurveSpec::h_curve(3), ConvexCurveSpec::n_curve(3)}) {
    CurveEvaluator ev(spec);
    auto t = ev.taylor(0.4, 8);
    double s = 1e-3;
    FMatrix sum = t[0];
    double p = 1;
    for (std::size_t k = 1; k < t.size(); ++k) {
      p *= s;
      sum = sum + p * t[k];
    }
    auto a = m_functions(sum), b = m_functions(ev.at(0.4 + s));
    for (std::size_t j = 0; j < a.size(); ++j) CHECK(a[j] * b[j] > 0);
  }
}

TEST_CASE("southwest minors") {
  for (int n = 1; n <= 4; ++n) {
    for (double m : m_functions(mat(spin::acute(Permutation::longest(n))))) CHECK(std::abs(std::abs(m) - 1) < 1e-12);
    for (double m : m_functions(FMatrix::identity(static_cast<std::size_t>(n) + 1))) CHECK(m == 0);
  }
}

TEST_CASE("exact multiplicity vectors") {
  for (int n = 1; n <= 4; ++n) {
    auto eta = Permutation::longest(n);
    CHECK(mult_vector_exact(spin::acute(eta)) == MultVector(static_cast<std::size_t>(n), 0));
    CHECK(mult_vector_exact(spin::SpinWord::identity(n)) == coxeter::mult_vector(eta));
  }
  for (const auto& s : coxeter::all_permutations(4)) {
    auto z0 = spin::acute(coxeter::compose(Permutation::longest(4), s));
    CHECK(mult_vector_exact(z0) == coxeter::mult_vector(s));
  }
}

TEST_CASE("numeric multiplicity vectors") {
  std::vector<std::pair<double, std::vector<double>>> samples;
  for (int k = 0; k < 6; ++k) {
    double h = 1e-3 * std::pow(2.0, k);
    for (double t : {h, -h}) samples.push_back({t, {2 * t, 3 * t * t * t, 0.5}});
  }
  auto got = mult_vector_numeric(0, samples);
  CHECK(got.mult == MultVector{1, 3, 0});
  CHECK(got.residual < 1e-9);
  for (auto& [t, m] : samples)
    for (auto& v : m) v += 1e-9;
  CHECK(mult_vector_numeric(0, samples).mult == MultVector{1, 3, 0});
}

TEST_CASE("vandert matrix") {
  auto m = vandert_matrix({0, 1, 2});
  CHECK(m(2, 0) == Poly::monomial(1, 2));
  CHECK(m(2, 1) == Poly::monomial(2, 1));
  CHECK(m(2, 2) == Poly(2));
  CHECK(m(0, 0) == Poly(1));
  CHECK(m(0, 1) == Poly());
}

TEST_CASE("itinerary of the h-curve") {
  for (int n : {1, 2, 3}) {
    auto spec = ConvexCurveSpec::h_curve(n);
    CHECK(itinerary(spec, 0.1, kPi - 0.1).empty());
    auto ev = itinerary(spec, -0.2, kPi + 0.2);
    REQUIRE(ev.size() == 2);
    CHECK(std::abs(ev[0].t) < 1e-6);
    CHECK(std::abs(ev[1].t - kPi) < 1e-6);
    for (const auto& e : ev) CHECK(e.sigma == Permutation::longest(n));
  }
}

TEST_CASE("itinerary events agree with the advance label") {
  testing::Rng rng(86);
  for (int k = 0; k < 10; ++k) {
    int n = testing::uniform_int(rng, 2, 3);
    auto z = spin::acute(coxeter::compose(Permutation::longest(n), testing::random_perm(rng, n)));
    if (z.sigma == Permutation::longest(n)) continue;
    auto ev = itinerary(ConvexCurveSpec::h_curve(n, mat(z)), -0.05, 0.05);
    REQUIRE(ev.size() == 1);
    CHECK(std::abs(ev[0].t) < 1e-6);
    CHECK(ev[0].signs == spin::pi_so(z));
  }
}

TEST_CASE("curve spec validation") {
  CHECK_THROWS_AS(ConvexCurveSpec::piecewise(2, {0, 1}, {{1}}), DomainError);
  CHECK_THROWS_AS(ConvexCurveSpec::piecewise(1, {1, 0}, {{1}}), DomainError);
  CHECK_THROWS_AS(ConvexCurveSpec::piecewise(1, {0, 1}, {{-1}}), DomainError);
}

TEST_CASE("property: h-curve events do not depend on the scan window") {
  testing::Rng rng(87);
  std::uniform_real_distribution<double> pad(0.05, 0.5);
  for (int k = 0; k < 40; ++k) {
    int n = testing::uniform_int(rng, 1, 4);
    double a = -pad(rng), b = kPi + pad(rng);
    auto ev = itinerary(ConvexCurveSpec::h_curve(n), a, b);
    REQUIRE(ev.size() == 2);
    CHECK(std::abs(ev[0].t) < 1e-6);
    CHECK(std::abs(ev[1].t - kPi) < 1e-6);
  }
}
