#pragma once

#include <utility>
#include <vector>

#include "lcb/linalg/dense.hpp"
#include "lcb/spin/spin_word.hpp"

// Signed Bruhat cells of SO_{n+1}: M = U1 P U2 with U1, U2 upper triangular
// with positive diagonal and P a signed permutation matrix.
namespace lcb::bruhat {

using coxeter::Permutation;
using coxeter::ReducedWord;
using linalg::FMatrix;
using linalg::kDefaultTol;
using spin::Quat;
using spin::SignedPermMatrix;
using spin::SpinWord;

struct Decomposition {
  FMatrix U1;
  SignedPermMatrix P;
  FMatrix U2;
  double residual = 0;  // max row sum of |U1 P U2 - M|
};

// Column-by-column pivoting on the bottom-most live row. tol is relative to
// max|M|. Throws DegeneracyError when a pivot cannot be told from noise.
Decomposition signed_bruhat_decompose(const FMatrix& m, double tol = kDefaultTol);

struct ExactDecomposition {
  linalg::RMatrix U1;
  SignedPermMatrix P;
  linalg::RMatrix U2;
  linalg::Rational residual;
};

// Same pivot rule with exact zero tests. Used where the floating factors grow
// too large to reconstruct M in double precision (points very close to a
// lower cell).
ExactDecomposition signed_bruhat_decompose_exact(const linalg::RMatrix& m);
SignedPermMatrix cell_of(const FMatrix& q, double tol = kDefaultTol);
Permutation unsigned_cell_of(const FMatrix& q, double tol = kDefaultTol);

// alpha_j(theta) = exp(theta a_j)
FMatrix alpha(int n, int j, double theta);
// Q alpha_j(eps theta), theta in (0, pi)
FMatrix phi(const FMatrix& q, int j, int eps, double theta);
// Pi(q) alpha_{i1}(eps1 theta1) ... alpha_{ik}(epsk thetak)
FMatrix psi(const Quat& q, const ReducedWord& word, const std::vector<int>& signs, const std::vector<double>& thetas);

// Angle of the last letter: Q must lie in a cell whose permutation s0 has
// s0 a_j below s0. Reads (U2)_{j,j} = r sin(theta), (U2)_{j,j+1} = r cos(theta).
double theta_j(const FMatrix& q, int j, double tol = kDefaultTol);

// Q^U = Q(U^{-1} Q)
FMatrix projective_act(const FMatrix& u, const FMatrix& q);

struct SliceCoords {
  std::vector<double> u;
  std::vector<double> x;
};

// 1-based positions (i, j) of the free entries of the slice through z0, in
// reading order.
std::vector<std::pair<int, int>> slice_free_positions(const Permutation& sigma);
SliceCoords slice_coords(const SpinWord& z0, const FMatrix& q, double tol = kDefaultTol);

// z = prod (acute_{ik})^{sign t_k}
SpinWord freesign_cell(int n, const ReducedWord& word, const std::vector<linalg::Rational>& times);

SignedPermMatrix adv_point(const FMatrix& q, double tol = kDefaultTol);
SignedPermMatrix chop_point(const FMatrix& q, double tol = kDefaultTol);

// Gamma(t) = Pi(q) Q(U1 exp(pi t h)) through an open-cell point Q at t = 1/2.
struct ConnectingCurve {
  FMatrix base;  // Pi(q)
  FMatrix u1;
  FMatrix at(double t) const;
  std::vector<std::pair<double, FMatrix>> sample(int count) const;
};
ConnectingCurve connect_through(const FMatrix& q, double tol = kDefaultTol);

}  // namespace lcb::bruhat
