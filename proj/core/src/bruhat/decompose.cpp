#include <cmath>

#include "lcb/bruhat/bruhat.hpp"
#include "lcb/error.hpp"

namespace lcb::bruhat {

namespace {

template <class S>
S abs_of(const S& x) {
  return x < 0 ? S(-x) : x;
}

template <class S>
S row_sum_norm(const linalg::Matrix<S>& m) {
  S best = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    S s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += abs_of(m(i, j));
    if (best < s) best = s;
  }
  return best;
}

template <class S>
struct Factors {
  linalg::Matrix<S> U1, U2;
  SignedPermMatrix P;
  S residual;
};

// pick(a, c, used) returns the pivot row of column c (or throws).
template <class S, class Pick>
Factors<S> eliminate(const linalg::Matrix<S>& m, Pick pick) {
  if (!m.square() || m.rows() < 2) throw RankMismatch("decomposition needs a square matrix of size >= 2");
  const std::size_t n = m.rows();
  linalg::Matrix<S> a = m;
  auto e_inv = linalg::Matrix<S>::identity(n);  // m = e_inv * a * f_inv throughout
  auto f_inv = linalg::Matrix<S>::identity(n);
  std::vector<bool> used(n, false);
  std::vector<int> images(n), signs(n);
  std::vector<S> pivot(n);

  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t p = pick(a, c, used);
    const S v = a(p, c);
    for (std::size_t r = 0; r < p; ++r) {
      S f = a(r, c) / v;
      if (f == 0) continue;
      for (std::size_t k = 0; k < n; ++k) a(r, k) -= f * a(p, k);
      for (std::size_t k = 0; k < n; ++k) e_inv(k, p) += f * e_inv(k, r);
    }
    for (std::size_t r = p + 1; r < n; ++r)
      if (!used[r]) a(r, c) = 0;
    for (std::size_t c2 = c + 1; c2 < n; ++c2) {
      S g = a(p, c2) / v;
      if (g == 0) continue;
      for (std::size_t k = 0; k < n; ++k) a(k, c2) -= g * a(k, c);
      for (std::size_t k = 0; k < n; ++k) f_inv(c, k) += g * f_inv(c2, k);
    }
    used[p] = true;
    images[p] = static_cast<int>(c) + 1;
    signs[p] = v > 0 ? 1 : -1;
    pivot[p] = abs_of(v);
  }

  Factors<S> d;
  d.P = SignedPermMatrix{Permutation(images), signs};
  d.U1 = e_inv;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) d.U1(k, i) *= pivot[i];
  d.U2 = f_inv;
  d.residual = row_sum_norm<S>(d.U1 * d.P.template matrix<S>() * d.U2 - m);
  return d;
}

}  // namespace

Decomposition signed_bruhat_decompose(const FMatrix& m, double tol) {
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  if (!m.square() || m.rows() < 2) throw RankMismatch("decomposition needs a square matrix of size at least 2");
  const double scale = linalg::max_abs(m);
  if (scale == 0) throw DomainError("decomposition of the zero matrix");
  const double floor = tol * scale;
  auto pick = [floor](const FMatrix& a, std::size_t c, const std::vector<bool>& used) {
    const std::size_t n = a.rows();
    std::size_t p = n;
    for (std::size_t r = n; r-- > 0;)
      if (!used[r] && std::abs(a(r, c)) > floor) {
        p = r;
        break;
      }
    if (p == n) throw DomainError("decomposition: matrix is numerically singular at column " + std::to_string(c + 1));
    if (std::abs(a(p, c)) <= 10 * floor)
      throw DegeneracyError("decomposition: pivot in column " + std::to_string(c + 1) + " is within the tolerance band");
    for (std::size_t r = p + 1; r < n; ++r)
      if (!used[r] && std::abs(a(r, c)) > floor / 10)
        throw DegeneracyError("decomposition: ambiguous pivot below row " + std::to_string(p + 1) + " in column " +
                              std::to_string(c + 1));
    return p;
  };
  auto f = eliminate<double>(m, pick);
  return {f.U1, f.P, f.U2, f.residual};
}

ExactDecomposition signed_bruhat_decompose_exact(const linalg::RMatrix& m) {
  auto pick = [](const linalg::RMatrix& a, std::size_t c, const std::vector<bool>& used) {
    for (std::size_t r = a.rows(); r-- > 0;)
      if (!used[r] && sgn(a(r, c)) != 0) return r;
    throw DomainError("decomposition: matrix is singular at column " + std::to_string(c + 1));
  };
  auto f = eliminate<linalg::Rational>(m, pick);
  return {f.U1, f.P, f.U2, f.residual};
}

SignedPermMatrix cell_of(const FMatrix& q, double tol) { return signed_bruhat_decompose(q, tol).P; }

Permutation unsigned_cell_of(const FMatrix& q, double tol) { return cell_of(q, tol).sigma; }

}  // namespace lcb::bruhat
