#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "lcb/error.hpp"
#include "lcb/linalg/scalar.hpp"

namespace lcb::linalg {

// Dense row-major matrix over any of the scalar types. Element access is
// 0-based; the math-facing helpers elsewhere take 1-based indices.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<S>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw DomainError("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw RankMismatch("matrix product shape mismatch");
    Matrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const S& a = x(i, k);
        if (is_zero(a)) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += a * y(k, j);
      }
    return r;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    x.check_same(y);
    Matrix r = x;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += y.data_[i];
    return r;
  }

  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    x.check_same(y);
    Matrix r = x;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= y.data_[i];
    return r;
  }

  friend Matrix operator*(const S& s, const Matrix& x) {
    Matrix r = x;
    for (auto& v : r.data_) v = s * v;
    return r;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

  Matrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    Matrix r(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j)
        r(i, j) = (*this)(static_cast<std::size_t>(rows[i]), static_cast<std::size_t>(cols[j]));
    return r;
  }

  template <class T, class F>
  Matrix<T> map(F f) const {
    Matrix<T> r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
    return r;
  }

 private:
  void check_same(const Matrix& y) const {
    if (rows_ != y.rows_ || cols_ != y.cols_) throw RankMismatch("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

using RMatrix = Matrix<Rational>;
using FMatrix = Matrix<double>;
using PMatrix = Matrix<Poly>;

// Laplace expansion along rows with memoization over column subsets:
// O(2^k k) ring operations, no division, so it works over any commutative ring.
template <class S>
S determinant(const Matrix<S>& m) {
  if (!m.square()) throw RankMismatch("determinant of a non-square matrix");
  const std::size_t k = m.rows();
  if (k == 0) return S(1);
  if (k > 20) throw DomainError("determinant expansion limited to 20x20");
  std::vector<S> d(std::size_t{1} << k, S(0));
  d[0] = S(1);
  for (std::size_t mask = 1; mask < d.size(); ++mask) {
    std::size_t r = static_cast<std::size_t>(__builtin_popcountll(mask)) - 1;
    S acc(0);
    int above = 0;  // columns in mask larger than c
    for (int c = static_cast<int>(k) - 1; c >= 0; --c) {
      std::size_t bit = std::size_t{1} << c;
      if (!(mask & bit)) continue;
      const S& a = m(r, static_cast<std::size_t>(c));
      if (!is_zero(a)) {
        if (above % 2 == 0)
          acc += a * d[mask ^ bit];
        else
          acc -= a * d[mask ^ bit];
      }
      ++above;
    }
    d[mask] = acc;
  }
  return d.back();
}

template <class S>
bool is_lower_unitriangular(const Matrix<S>& m) {
  if (!m.square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (!(m(i, j) == S(i == j ? 1 : 0))) return false;
  return true;
}

// Inverse of a unit lower-triangular matrix by forward substitution.
template <class S>
Matrix<S> inverse_lower_unitriangular(const Matrix<S>& l) {
  if (!is_lower_unitriangular(l)) throw DomainError("expected a unit lower-triangular matrix");
  const std::size_t n = l.rows();
  Matrix<S> x = Matrix<S>::identity(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = j + 1; i < n; ++i) {
      S acc(0);
      for (std::size_t k = j; k < i; ++k) acc += l(i, k) * x(k, j);
      x(i, j) = -acc;
    }
  return x;
}

// exp(N) for strictly lower-triangular N, as the finite series.
template <class S>
Matrix<S> nilpotent_exp(const Matrix<S>& n) {
  if (!n.square()) throw RankMismatch("exp of a non-square matrix");
  for (std::size_t i = 0; i < n.rows(); ++i)
    for (std::size_t j = i; j < n.cols(); ++j)
      if (!is_zero(n(i, j))) throw DomainError("nilpotent_exp needs a strictly lower-triangular matrix");
  Matrix<S> result = Matrix<S>::identity(n.rows());
  Matrix<S> power = result;
  Rational fact = 1;
  for (std::size_t k = 1; k < n.rows(); ++k) {
    power = power * n;
    fact *= static_cast<long>(k);
    result = result + from_rational<S>(Rational(1) / fact) * power;
  }
  return result;
}

template <class S>
std::string to_string(const Matrix<S>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += to_string(m(i, j));
    }
    out += "]";
  }
  return out + "]";
}

RMatrix to_rational(const FMatrix& m);
FMatrix to_float(const RMatrix& m);

}  // namespace lcb::linalg
