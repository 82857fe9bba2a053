#include "lcb/linalg/dense.hpp"

#include <cmath>

#include "lcb/linalg/generators.hpp"

namespace lcb::linalg {

RMatrix to_rational(const FMatrix& m) {
  return m.map<Rational>([](double x) {
    if (!std::isfinite(x)) throw DomainError("non-finite entry");
    return Rational(x);
  });
}

FMatrix to_float(const RMatrix& m) {
  return m.map<double>([](const Rational& q) { return q.get_d(); });
}

FMatrix frak_a(int n, int j) {
  check_generator(n, j);
  FMatrix m(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1);
  auto jj = static_cast<std::size_t>(j);
  m(jj, jj - 1) = 1.0;
  m(jj - 1, jj) = -1.0;
  return m;
}

FMatrix frak_hL(int n) {
  FMatrix m(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1);
  for (int j = 1; j <= n; ++j)
    m(static_cast<std::size_t>(j), static_cast<std::size_t>(j) - 1) = std::sqrt(static_cast<double>(j * (n + 1 - j)));
  return m;
}

FMatrix frak_h(int n) {
  FMatrix hl = frak_hL(n);
  return hl - hl.transpose();
}

double max_abs(const FMatrix& m) {
  double r = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r = std::max(r, std::abs(m(i, j)));
  return r;
}

double max_abs_diff(const FMatrix& a, const FMatrix& b) { return max_abs(a - b); }

double orthogonality_defect(const FMatrix& m) {
  return max_abs(m.transpose() * m - FMatrix::identity(m.cols()));
}

LUResult lu_factor(const FMatrix& q, double tol) {
  if (!q.square()) throw RankMismatch("lu_chart needs a square matrix");
  const std::size_t n = q.rows();
  const double floor = tol * std::max(max_abs(q), 1e-300);
  FMatrix l = FMatrix::identity(n);
  FMatrix u(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = k; j < n; ++j) {
      double s = q(k, j);
      for (std::size_t p = 0; p < k; ++p) s -= l(k, p) * u(p, j);
      u(k, j) = s;
    }
    if (!(u(k, k) > floor))
      throw ChartDomainError("northwest minor " + std::to_string(k + 1) + " is not positive", static_cast<int>(k + 1));
    for (std::size_t i = k + 1; i < n; ++i) {
      double s = q(i, k);
      for (std::size_t p = 0; p < k; ++p) s -= l(i, p) * u(p, k);
      l(i, k) = s / u(k, k);
    }
  }
  return {l, u};
}

FMatrix lu_chart(const FMatrix& q, double tol) { return lu_factor(q, tol).L; }

QRResult qr_factor(const FMatrix& m) {
  if (!m.square()) throw RankMismatch("qr_chart needs a square matrix");
  const std::size_t n = m.rows();
  FMatrix q(n, n), r(n, n);
  const double scale = std::max(max_abs(m), 1e-300);
  std::vector<double> v(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) v[i] = m(i, j);
    double before = 0;
    for (double x : v) before += x * x;
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t p = 0; p < j; ++p) {
        double d = 0;
        for (std::size_t i = 0; i < n; ++i) d += q(i, p) * v[i];
        r(p, j) += d;
        for (std::size_t i = 0; i < n; ++i) v[i] -= d * q(i, p);
      }
    }
    double norm = 0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (!(norm > 1e-14 * scale) || norm < 1e-14 * std::sqrt(before))
      throw DomainError("qr_chart: input is numerically singular");
    r(j, j) = norm;
    for (std::size_t i = 0; i < n; ++i) q(i, j) = v[i] / norm;
  }
  return {q, r};
}

FMatrix qr_chart(const FMatrix& m) { return qr_factor(m).Q; }

FMatrix solve(const FMatrix& a, const FMatrix& b) {
  if (!a.square() || a.rows() != b.rows()) throw RankMismatch("solve shape mismatch");
  const std::size_t n = a.rows();
  FMatrix m = a, x = b;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m(i, k)) > std::abs(m(piv, k))) piv = i;
    if (m(piv, k) == 0.0) throw DomainError("solve: singular matrix");
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      for (std::size_t j = 0; j < x.cols(); ++j) std::swap(x(k, j), x(piv, j));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      double f = m(i, k) / m(k, k);
      if (f == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
      for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) -= f * x(k, j);
    }
  }
  for (std::size_t kk = n; kk-- > 0;) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      double s = x(kk, j);
      for (std::size_t p = kk + 1; p < n; ++p) s -= m(kk, p) * x(p, j);
      x(kk, j) = s / m(kk, kk);
    }
  }
  return x;
}

FMatrix inverse(const FMatrix& a) { return solve(a, FMatrix::identity(a.rows())); }

FMatrix inverse_upper(const FMatrix& u) {
  const std::size_t n = u.rows();
  FMatrix x(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (u(j, j) == 0.0) throw DomainError("inverse_upper: zero diagonal");
    x(j, j) = 1.0 / u(j, j);
    for (std::size_t i = j; i-- > 0;) {
      double s = 0;
      for (std::size_t p = i + 1; p <= j; ++p) s += u(i, p) * x(p, j);
      x(i, j) = -s / u(i, i);
    }
  }
  return x;
}

FMatrix matrix_exp_float(const FMatrix& a) {
  if (!a.square()) throw RankMismatch("exp of a non-square matrix");
  const std::size_t n = a.rows();
  double norm1 = 0;
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += std::abs(a(i, j));
    norm1 = std::max(norm1, s);
  }
  int squarings = 0;
  if (norm1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
  FMatrix x = std::ldexp(1.0, -squarings) * a;

  constexpr int kDeg = 8;
  double c = 1.0;
  FMatrix num = FMatrix::identity(n), den = FMatrix::identity(n), power = FMatrix::identity(n);
  for (int k = 1; k <= kDeg; ++k) {
    c *= static_cast<double>(kDeg - k + 1) / static_cast<double>(k * (2 * kDeg - k + 1));
    power = power * x;
    num = num + c * power;
    den = den + ((k % 2) ? -c : c) * power;
  }
  FMatrix e = solve(den, num);
  for (int s = 0; s < squarings; ++s) e = e * e;
  return e;
}

}  // namespace lcb::linalg
