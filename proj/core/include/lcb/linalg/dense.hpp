#pragma once

#include "lcb/linalg/matrix.hpp"

// Binary64 routines: charts, exponentials, solves.
namespace lcb::linalg {

inline constexpr double kDefaultTol = 1e-9;

double max_abs(const FMatrix& m);
double max_abs_diff(const FMatrix& a, const FMatrix& b);
// ||M^T M - I||_max
double orthogonality_defect(const FMatrix& m);

struct LUResult {
  FMatrix L;  // unit lower triangular
  FMatrix U;  // upper triangular, positive diagonal
};

// Q = L U with L in Lo^1 and U in Up^+. Every northwest minor must exceed
// tol * max|Q|; otherwise ChartDomainError carrying the 1-based minor size.
LUResult lu_factor(const FMatrix& q, double tol = kDefaultTol);
FMatrix lu_chart(const FMatrix& q, double tol = kDefaultTol);

struct QRResult {
  FMatrix Q;  // orthogonal
  FMatrix R;  // upper triangular, positive diagonal
};

// Gram-Schmidt with one reorthogonalization pass.
QRResult qr_factor(const FMatrix& m);
FMatrix qr_chart(const FMatrix& m);

// Scaling and squaring with the [8/8] Pade approximant.
FMatrix matrix_exp_float(const FMatrix& a);

// Partial-pivoting solve of A X = B.
FMatrix solve(const FMatrix& a, const FMatrix& b);
FMatrix inverse(const FMatrix& a);
FMatrix inverse_upper(const FMatrix& u);

}  // namespace lcb::linalg
