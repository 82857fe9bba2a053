#pragma once

#include <cmath>
#include <vector>

#include "lcb/linalg/matrix.hpp"

// Lie-algebra generators and friends for GL_{n+1}. Generator index j is
// 1-based and ranges over 1..n.
namespace lcb::linalg {

inline void check_generator(int n, int j) {
  if (n < 1 || j < 1 || j > n) throw DomainError("generator index out of range");
}

// l_j = e_{j+1} e_j^T
template <class S>
Matrix<S> frak_l(int n, int j) {
  check_generator(n, j);
  Matrix<S> m(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1);
  m(static_cast<std::size_t>(j), static_cast<std::size_t>(j) - 1) = S(1);
  return m;
}

// lambda_j(t) = exp(t l_j) = I + t l_j
template <class S>
Matrix<S> lambda(int n, int j, const S& t) {
  check_generator(n, j);
  Matrix<S> m = Matrix<S>::identity(static_cast<std::size_t>(n) + 1);
  m(static_cast<std::size_t>(j), static_cast<std::size_t>(j) - 1) = t;
  return m;
}

// n = sum_j l_j
template <class S>
Matrix<S> frak_n(int n) {
  Matrix<S> m(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1);
  for (int j = 1; j <= n; ++j) m(static_cast<std::size_t>(j), static_cast<std::size_t>(j) - 1) = S(1);
  return m;
}

// X = diag(1, -1, 1, ...)
template <class S>
Matrix<S> alternating_sign(int n) {
  Matrix<S> m(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) m(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = S(i % 2 ? -1 : 1);
  return m;
}

// Row k has d_k at column images[k] (both 1-based in images).
template <class S>
Matrix<S> signed_perm_matrix(const std::vector<int>& images, const std::vector<int>& signs) {
  const std::size_t n = images.size();
  Matrix<S> m(n, n);
  for (std::size_t k = 0; k < n; ++k)
    m(k, static_cast<std::size_t>(images[k] - 1)) = S(signs.empty() ? 1 : signs[k]);
  return m;
}

// a_j = e_{j+1} e_j^T - e_j e_{j+1}^T
FMatrix frak_a(int n, int j);
// h_L = sum_j sqrt(j(n+1-j)) l_j
FMatrix frak_hL(int n);
// h = h_L - h_L^T
FMatrix frak_h(int n);

}  // namespace lcb::linalg
