#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace lcb::linalg {

using Rational = mpq_class;
using Float = double;

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);
std::string to_string(double x);

// (a + b*sqrt2) / 2^m, normalized so that m is minimal.
class Root2 {
 public:
  Root2() = default;
  Root2(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Root2(std::int64_t a, std::int64_t b, int m);

  static Root2 sqrt2() { return Root2(0, 1, 0); }
  static Root2 inv_sqrt2() { return Root2(0, 1, 1); }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  int m() const { return m_; }

  Root2 operator-() const { return Root2(-a_, -b_, m_); }
  friend Root2 operator+(const Root2& x, const Root2& y);
  friend Root2 operator-(const Root2& x, const Root2& y) { return x + (-y); }
  friend Root2 operator*(const Root2& x, const Root2& y);
  Root2& operator+=(const Root2& y) { return *this = *this + y; }
  Root2& operator-=(const Root2& y) { return *this = *this - y; }
  Root2& operator*=(const Root2& y) { return *this = *this * y; }
  friend bool operator==(const Root2& x, const Root2& y) = default;

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  double to_double() const;

 private:
  void normalize();

  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
  int m_ = 0;
};

std::string to_string(const Root2& x);
Root2 parse_root2(const std::string& s);

// Dense univariate polynomial over the rationals, trailing zeros stripped.
class Poly {
 public:
  Poly() = default;
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c);              // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rational> coeffs);

  static Poly variable();
  static Poly monomial(const Rational& c, int degree);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(int k) const;
  Rational eval(const Rational& t) const;
  double eval(double t) const;
  Poly derivative() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& x, const Poly& y);
  friend Poly operator-(const Poly& x, const Poly& y);
  friend Poly operator*(const Poly& x, const Poly& y);
  Poly& operator+=(const Poly& y) { return *this = *this + y; }
  Poly& operator-=(const Poly& y) { return *this = *this - y; }
  Poly& operator*=(const Poly& y) { return *this = *this * y; }
  friend bool operator==(const Poly& x, const Poly& y) { return x.c_ == y.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

std::string to_string(const Poly& p);

// Index of the lowest nonzero coefficient. Throws on the zero polynomial.
int root_multiplicity_at_zero(const Poly& p);

// Conversion used by generic code that needs 1/k! and friends in any ring.
template <class S>
S from_rational(const Rational& q);

template <>
inline Rational from_rational<Rational>(const Rational& q) { return q; }
template <>
inline double from_rational<double>(const Rational& q) { return q.get_d(); }
template <>
inline Poly from_rational<Poly>(const Rational& q) { return Poly(q); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Root2& x) { return x.is_zero(); }
inline bool is_zero(const Poly& p) { return p.is_zero(); }

}  // namespace lcb::linalg
