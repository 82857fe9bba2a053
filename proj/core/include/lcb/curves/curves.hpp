#pragma once

#include <utility>
#include <vector>

#include "lcb/bruhat/bruhat.hpp"
#include "lcb/coxeter/permutation.hpp"
#include "lcb/linalg/dense.hpp"
#include "lcb/linalg/exterior.hpp"
#include "lcb/spin/spin_word.hpp"

// Convex curves in Lo^1, locally convex curves in SO_{n+1}, the southwest
// minors m_j and their vanishing orders, and itineraries.
namespace lcb::curves {

using coxeter::MultVector;
using coxeter::Permutation;
using linalg::FMatrix;
using linalg::PMatrix;
using linalg::Poly;
using linalg::Rational;
using linalg::RMatrix;

struct ConvexCurveSpec {
  enum class Kind { Piecewise, HCurve, NCurve };

  Kind kind = Kind::Piecewise;
  int n = 1;
  // Piecewise: grid[0] < ... < grid[M]; kappas[m] holds kappa_1..kappa_n on
  // [grid[m], grid[m+1]]. Read as beta_i at Lo level.
  std::vector<Rational> grid;
  std::vector<std::vector<Rational>> kappas;
  // Gamma(grid[0]) for Piecewise, Gamma(0) for the closed forms.
  FMatrix base;

  static ConvexCurveSpec piecewise(int n, std::vector<Rational> grid, std::vector<std::vector<Rational>> kappas);
  // Gamma(t) = base exp(t h)
  static ConvexCurveSpec h_curve(int n, FMatrix base = {});
  // Gamma(t) = base Q(exp(t n))
  static ConvexCurveSpec n_curve(int n, FMatrix base = {});

  void validate() const;
};

// Lo level, exact: Gamma(t) = L0 prod exp(dt_m sum_i beta_i l_i) from t0 to t.
RMatrix integrate_convex_exact(const ConvexCurveSpec& spec, const RMatrix& l0, const Rational& t0, const Rational& t);
// Same, as a polynomial matrix in t valid on the last grid interval.
PMatrix integrate_convex_symbolic(const ConvexCurveSpec& spec, const RMatrix& l0, const Rational& t0);
// Independent oracle: sum over arrow paths i0 -> i1 of the iterated integrals
// of beta_{j1}(tau_1) ... beta_{jl}(tau_l) over t0 <= tau_1 <= ... <= tau_l <= t.
Rational explicit_path_sum(const ConvexCurveSpec& spec, const Rational& t0, const Rational& t,
                           const linalg::IndexSet& i0, const linalg::IndexSet& i1);

// Evaluation of an SO-level curve at arbitrary t, plus local Taylor data.
class CurveEvaluator {
 public:
  explicit CurveEvaluator(ConvexCurveSpec spec);
  const ConvexCurveSpec& spec() const { return spec_; }
  int n() const { return spec_.n; }
  double t_min() const;
  double t_max() const;
  FMatrix at(double t) const;
  // Matrices T_0..T_deg with M(t + s) = sum T_k s^k + O(s^{deg+1}), where M
  // differs from Gamma by a right factor in Up^+ (so m_j agree up to a
  // positive multiple).
  std::vector<FMatrix> taylor(double t, int deg) const;

 private:
  FMatrix generator(std::size_t interval) const;
  std::size_t interval_of(double t) const;

  ConvexCurveSpec spec_;
  std::vector<double> grid_;
  std::vector<FMatrix> frames_;
};

// Sampled frames of Gamma on [t0, t1], re-orthonormalized every step.
std::vector<std::pair<double, FMatrix>> integrate_lc_numeric(const ConvexCurveSpec& spec, double t0, double t1,
                                                             double step);

// m_j = det of the southwest j x j block, j = 1..n.
std::vector<double> m_functions(const FMatrix& q);
std::vector<Poly> m_functions(const PMatrix& q);

// Vanishing orders at t = 0 of the minors of Pi(z0) exp(t n); equals mult(eta sigma_{z0}).
MultVector mult_vector_exact(const spin::SpinWord& z0);

struct NumericMult {
  MultVector mult;
  double residual = 0;  // max distance of a fitted slope from its rounding
};
// Least-squares slope of log|m_j| against log|t - t0|.
NumericMult mult_vector_numeric(double t0, const std::vector<std::pair<double, std::vector<double>>>& samples);

// M_{i,1} = t^{d_i}, M_{i,j+1} = d/dt M_{i,j}.
PMatrix vandert_matrix(const std::vector<int>& d);

struct ItineraryEvent {
  double t = 0;
  Permutation sigma;               // Gamma(t) in Bru_{eta sigma}
  spin::SignedPermMatrix signs;    // the cell at the event
};

struct ItineraryOptions {
  double step = 0;            // 0 means (t1 - t0) / 4096
  double detect = 1e-7;       // flag |m_j| below this
  double classify_tol = 1e-6; // decomposition tolerance at a refined event
};

std::vector<ItineraryEvent> itinerary(const ConvexCurveSpec& spec, double t0, double t1,
                                      const ItineraryOptions& opts = {});

}  // namespace lcb::curves
