#include "lcb/linalg/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "lcb/error.hpp"

namespace lcb::linalg {

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw Error("Root2 arithmetic overflow");
  return r;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw Error("Root2 arithmetic overflow");
  return r;
}

std::int64_t shifted(std::int64_t x, int k) {
  for (int i = 0; i < k; ++i) x = checked_mul(x, 2);
  return x;
}

}  // namespace

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
  std::string t;
  for (char c : s)
    if (c != ' ') t += c;
  if (t.empty()) throw DomainError("empty rational literal");
  if (t[0] == '+') t.erase(0, 1);
  auto dot = t.find('.');
  auto exp = t.find_first_of("eE");
  if (dot != std::string::npos || exp != std::string::npos) {
    // Decimal literal: read it exactly rather than through a double.
    std::string mant = t.substr(0, exp);
    long e10 = exp == std::string::npos ? 0 : std::stol(t.substr(exp + 1));
    bool neg = !mant.empty() && mant[0] == '-';
    if (neg) mant.erase(0, 1);
    std::string digits;
    long frac = 0;
    bool after = false;
    for (char c : mant) {
      if (c == '.') {
        after = true;
        continue;
      }
      if (c < '0' || c > '9') throw DomainError("bad rational literal: " + s);
      digits += c;
      if (after) ++frac;
    }
    if (digits.empty()) throw DomainError("bad rational literal: " + s);
    mpz_class num(digits, 10);
    long p = e10 - frac;
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(p < 0 ? -p : p));
    Rational q = p < 0 ? Rational(num, pow10) : Rational(num * pow10);
    q.canonicalize();
    return neg ? Rational(-q) : q;
  }
  Rational q;
  if (q.set_str(t, 10) != 0) throw DomainError("bad rational literal: " + s);
  if (q.get_den() == 0) throw DomainError("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Root2::Root2(std::int64_t a, std::int64_t b, int m) : a_(a), b_(b), m_(m) {
  if (m_ < 0) {
    a_ = shifted(a_, -m_);
    b_ = shifted(b_, -m_);
    m_ = 0;
  }
  normalize();
}

void Root2::normalize() {
  if (a_ == 0 && b_ == 0) {
    m_ = 0;
    return;
  }
  while (m_ > 0 && a_ % 2 == 0 && b_ % 2 == 0) {
    a_ /= 2;
    b_ /= 2;
    --m_;
  }
}

Root2 operator+(const Root2& x, const Root2& y) {
  int m = std::max(x.m_, y.m_);
  std::int64_t a = checked_add(shifted(x.a_, m - x.m_), shifted(y.a_, m - y.m_));
  std::int64_t b = checked_add(shifted(x.b_, m - x.m_), shifted(y.b_, m - y.m_));
  return Root2(a, b, m);
}

Root2 operator*(const Root2& x, const Root2& y) {
  std::int64_t a = checked_add(checked_mul(x.a_, y.a_), checked_mul(2, checked_mul(x.b_, y.b_)));
  std::int64_t b = checked_add(checked_mul(x.a_, y.b_), checked_mul(x.b_, y.a_));
  return Root2(a, b, x.m_ + y.m_);
}

double Root2::to_double() const {
  return (static_cast<double>(a_) + static_cast<double>(b_) * std::sqrt(2.0)) / std::ldexp(1.0, m_);
}

std::string to_string(const Root2& x) {
  auto r2term = [](std::int64_t b) {
    if (b == 1) return std::string("r2");
    if (b == -1) return std::string("-r2");
    return std::to_string(b) + "r2";
  };
  std::string body;
  if (x.b() == 0) {
    body = std::to_string(x.a());
  } else if (x.a() == 0) {
    body = r2term(x.b());
  } else {
    body = std::to_string(x.a());
    std::string t = r2term(x.b());
    body += (t[0] == '-') ? t : "+" + t;
  }
  if (x.m() == 0) return body;
  return "(" + body + ")/2^" + std::to_string(x.m());
}

Root2 parse_root2(const std::string& s) {
  std::string t;
  for (char c : s)
    if (c != ' ') t += c;
  int m = 0;
  auto slash = t.rfind(")/2^");
  if (!t.empty() && t[0] == '(') {
    if (slash == std::string::npos) throw DomainError("bad root2 literal: " + s);
    m = std::stoi(t.substr(slash + 4));
    t = t.substr(1, slash - 1);
  }
  std::int64_t a = 0, b = 0;
  std::size_t i = 0;
  if (t.empty()) throw DomainError("bad root2 literal: " + s);
  while (i < t.size()) {
    int sign = 1;
    if (t[i] == '+' || t[i] == '-') {
      sign = t[i] == '-' ? -1 : 1;
      ++i;
    }
    std::size_t j = i;
    while (j < t.size() && t[j] >= '0' && t[j] <= '9') ++j;
    std::int64_t v = j > i ? std::stoll(t.substr(i, j - i)) : 1;
    if (t.compare(j, 2, "r2") == 0) {
      b += sign * v;
      j += 2;
    } else {
      if (j == i) throw DomainError("bad root2 literal: " + s);
      a += sign * v;
    }
    i = j;
  }
  return Root2(a, b, m);
}

Poly::Poly(const Rational& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::variable() { return Poly(std::vector<Rational>{0, 1}); }

Poly Poly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

Rational Poly::eval(const Rational& t) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
  return r;
}

double Poly::eval(double t) const {
  double r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + it->get_d();
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return Poly(std::move(d));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly operator+(const Poly& x, const Poly& y) {
  std::vector<Rational> r(std::max(x.c_.size(), y.c_.size()), Rational(0));
  for (std::size_t i = 0; i < x.c_.size(); ++i) r[i] += x.c_[i];
  for (std::size_t i = 0; i < y.c_.size(); ++i) r[i] += y.c_[i];
  return Poly(std::move(r));
}

Poly operator-(const Poly& x, const Poly& y) { return x + (-y); }

Poly operator*(const Poly& x, const Poly& y) {
  if (x.is_zero() || y.is_zero()) return Poly();
  std::vector<Rational> r(x.c_.size() + y.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (sgn(x.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) r[i + j] += x.c_[i] * y.c_[j];
  }
  return Poly(std::move(r));
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    Rational c = p.coeff(k);
    if (sgn(c) == 0) continue;
    std::string term = to_string(c);
    if (k > 0) term += k == 1 ? "*t" : "*t^" + std::to_string(k);
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

int root_multiplicity_at_zero(const Poly& p) {
  if (p.is_zero()) throw DomainError("root multiplicity of the zero polynomial");
  int k = 0;
  while (sgn(p.coeffs()[static_cast<std::size_t>(k)]) == 0) ++k;
  return k;
}

}  // namespace lcb::linalg
