#include <algorithm>
#include <cmath>
#include <limits>

#include "lcb/curves/curves.hpp"
#include "lcb/error.hpp"
#include "lcb/linalg/generators.hpp"

namespace lcb::curves {

namespace {

FMatrix identity_or(const FMatrix& base, int n) {
  if (base.rows() == 0) return FMatrix::identity(static_cast<std::size_t>(n) + 1);
  if (base.rows() != static_cast<std::size_t>(n) + 1 || !base.square()) throw RankMismatch("curve base has wrong size");
  return base;
}

RMatrix beta_matrix(const ConvexCurveSpec& spec, std::size_t m) {
  RMatrix b(static_cast<std::size_t>(spec.n) + 1, static_cast<std::size_t>(spec.n) + 1);
  for (int i = 1; i <= spec.n; ++i)
    b(static_cast<std::size_t>(i), static_cast<std::size_t>(i) - 1) = spec.kappas[m][static_cast<std::size_t>(i) - 1];
  return b;
}

void require_piecewise(const ConvexCurveSpec& spec) {
  if (spec.kind != ConvexCurveSpec::Kind::Piecewise) throw DomainError("exact integration needs a piecewise-constant spec");
  spec.validate();
}

void check_range(const ConvexCurveSpec& spec, const Rational& t0, const Rational& t) {
  if (t0 < spec.grid.front() || t > spec.grid.back() || t < t0)
    throw DomainError("integration range must satisfy grid[0] <= t0 <= t <= grid[M]");
}

Poly antiderivative(const Poly& p) {
  std::vector<Rational> c(p.coeffs().size() + 1, Rational(0));
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) c[k + 1] = p.coeffs()[k] / static_cast<long>(k + 1);
  return Poly(std::move(c));
}

void enumerate_paths(const linalg::IndexSet& cur, const linalg::IndexSet& target, std::vector<int>& letters,
                     std::vector<std::vector<int>>& out) {
  if (cur.sum() == target.sum()) {
    if (cur == target) out.push_back(letters);
    return;
  }
  for (int v : cur.elems) {
    auto next = linalg::arrow_step(cur, v - 1);
    if (v < 2 || !next || !linalg::elementwise_leq(target, *next)) continue;
    letters.push_back(v - 1);
    enumerate_paths(*next, target, letters, out);
    letters.pop_back();
  }
}

}  // namespace

ConvexCurveSpec ConvexCurveSpec::piecewise(int n, std::vector<Rational> grid, std::vector<std::vector<Rational>> kappas) {
  ConvexCurveSpec s;
  s.kind = Kind::Piecewise;
  s.n = n;
  s.grid = std::move(grid);
  s.kappas = std::move(kappas);
  s.validate();
  return s;
}

ConvexCurveSpec ConvexCurveSpec::h_curve(int n, FMatrix base) {
  ConvexCurveSpec s;
  s.kind = Kind::HCurve;
  s.n = n;
  s.base = identity_or(base, n);
  return s;
}

ConvexCurveSpec ConvexCurveSpec::n_curve(int n, FMatrix base) {
  ConvexCurveSpec s;
  s.kind = Kind::NCurve;
  s.n = n;
  s.base = identity_or(base, n);
  return s;
}

void ConvexCurveSpec::validate() const {
  if (n < 1) throw DomainError("curve rank must be >= 1");
  if (kind != Kind::Piecewise) return;
  if (grid.size() < 2) throw DomainError("curve grid needs at least two breakpoints");
  if (kappas.size() + 1 != grid.size()) throw DomainError("need one kappa vector per grid interval");
  for (std::size_t m = 0; m + 1 < grid.size(); ++m) {
    if (!(grid[m] < grid[m + 1])) throw DomainError("curve grid must be strictly increasing");
    if (kappas[m].size() != static_cast<std::size_t>(n)) throw DomainError("kappa vector has wrong length");
    for (const auto& k : kappas[m])
      if (sgn(k) <= 0) throw DomainError("curve coefficients must be strictly positive");
  }
}

RMatrix integrate_convex_exact(const ConvexCurveSpec& spec, const RMatrix& l0, const Rational& t0, const Rational& t) {
  require_piecewise(spec);
  check_range(spec, t0, t);
  RMatrix l = l0;
  for (std::size_t m = 0; m + 1 < spec.grid.size(); ++m) {
    Rational a = std::max(spec.grid[m], t0), b = std::min(spec.grid[m + 1], t);
    if (b <= a) continue;
    l = l * linalg::nilpotent_exp(Rational(b - a) * beta_matrix(spec, m));
  }
  return l;
}

PMatrix integrate_convex_symbolic(const ConvexCurveSpec& spec, const RMatrix& l0, const Rational& t0) {
  require_piecewise(spec);
  const std::size_t last = spec.kappas.size() - 1;
  Rational a = std::max(spec.grid[last], t0);
  RMatrix start = integrate_convex_exact(spec, l0, t0, a);
  PMatrix ps = start.map<Poly>([](const Rational& q) { return Poly(q); });
  Poly dt(std::vector<Rational>{Rational(-a), Rational(1)});
  PMatrix gen = beta_matrix(spec, last).map<Poly>([&](const Rational& q) { return Poly(q) * dt; });
  return ps * linalg::nilpotent_exp(gen);
}

Rational explicit_path_sum(const ConvexCurveSpec& spec, const Rational& t0, const Rational& t,
                           const linalg::IndexSet& i0, const linalg::IndexSet& i1) {
  require_piecewise(spec);
  check_range(spec, t0, t);
  if (i0.size() != i1.size()) throw DomainError("index sets of different size");
  std::vector<std::vector<int>> paths;
  std::vector<int> letters;
  if (linalg::elementwise_leq(i1, i0)) enumerate_paths(i0, i1, letters, paths);

  struct Piece {
    Rational a, b;
    std::size_t m;
  };
  std::vector<Piece> pieces;
  for (std::size_t m = 0; m + 1 < spec.grid.size(); ++m) {
    Rational a = std::max(spec.grid[m], t0), b = std::min(spec.grid[m + 1], t);
    if (b > a) pieces.push_back({a, b, m});
  }

  Rational total = 0;
  for (const auto& path : paths) {
    std::vector<Poly> g(pieces.size(), Poly(1));
    Rational end = 1;
    for (int j : path) {
      Rational acc = 0;
      for (std::size_t p = 0; p < pieces.size(); ++p) {
        Poly h = Poly(spec.kappas[pieces[p].m][static_cast<std::size_t>(j) - 1]) * antiderivative(g[p]);
        g[p] = h - Poly(h.eval(pieces[p].a)) + Poly(acc);
        acc = g[p].eval(pieces[p].b);
      }
      end = acc;
    }
    total += pieces.empty() ? Rational(path.empty() ? 1 : 0) : end;
  }
  return total;
}

CurveEvaluator::CurveEvaluator(ConvexCurveSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  spec_.base = identity_or(spec_.base, spec_.n);
  if (spec_.kind != ConvexCurveSpec::Kind::Piecewise) return;
  for (const auto& g : spec_.grid) grid_.push_back(g.get_d());
  frames_.push_back(spec_.base);
  for (std::size_t m = 0; m + 1 < grid_.size(); ++m)
    frames_.push_back(linalg::qr_chart(frames_.back() * linalg::matrix_exp_float((grid_[m + 1] - grid_[m]) * generator(m))));
}

double CurveEvaluator::t_min() const {
  return grid_.empty() ? -std::numeric_limits<double>::infinity() : grid_.front();
}

double CurveEvaluator::t_max() const {
  return grid_.empty() ? std::numeric_limits<double>::infinity() : grid_.back();
}

FMatrix CurveEvaluator::generator(std::size_t m) const {
  const int n = spec_.n;
  if (spec_.kind == ConvexCurveSpec::Kind::HCurve) return linalg::frak_h(n);
  FMatrix a(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1);
  for (int j = 1; j <= n; ++j) a = a + spec_.kappas[m][static_cast<std::size_t>(j) - 1].get_d() * linalg::frak_a(n, j);
  return a;
}

std::size_t CurveEvaluator::interval_of(double t) const {
  if (t < grid_.front() || t > grid_.back()) throw DomainError("curve evaluated outside its grid");
  auto it = std::upper_bound(grid_.begin(), grid_.end(), t);
  std::size_t m = static_cast<std::size_t>(it - grid_.begin());
  return std::min(m == 0 ? 0 : m - 1, grid_.size() - 2);
}

FMatrix CurveEvaluator::at(double t) const {
  switch (spec_.kind) {
    case ConvexCurveSpec::Kind::HCurve:
      return spec_.base * linalg::matrix_exp_float(t * linalg::frak_h(spec_.n));
    case ConvexCurveSpec::Kind::NCurve:
      return spec_.base * linalg::qr_chart(linalg::nilpotent_exp(t * linalg::frak_n<double>(spec_.n)));
    case ConvexCurveSpec::Kind::Piecewise: {
      std::size_t m = interval_of(t);
      return frames_[m] * linalg::matrix_exp_float((t - grid_[m]) * generator(m));
    }
  }
  throw Error("unknown curve kind");
}

std::vector<FMatrix> CurveEvaluator::taylor(double t, int deg) const {
  FMatrix m0, a;
  if (spec_.kind == ConvexCurveSpec::Kind::NCurve) {
    a = linalg::frak_n<double>(spec_.n);
    m0 = spec_.base * linalg::nilpotent_exp(t * a);
  } else {
    m0 = at(t);
    a = generator(spec_.kind == ConvexCurveSpec::Kind::Piecewise ? interval_of(t) : 0);
  }
  std::vector<FMatrix> out{m0};
  for (int k = 1; k <= deg; ++k) out.push_back((1.0 / k) * (out.back() * a));
  return out;
}

std::vector<std::pair<double, FMatrix>> integrate_lc_numeric(const ConvexCurveSpec& spec, double t0, double t1,
                                                             double step) {
  if (!(step > 0)) throw DomainError("step must be positive");
  if (!(t1 >= t0)) throw DomainError("integration needs t1 >= t0");
  CurveEvaluator ev(spec);
  std::vector<std::pair<double, FMatrix>> out;
  FMatrix q = ev.at(t0);
  out.emplace_back(t0, q);
  double t = t0;
  const double eps = 1e-12 * std::max(1.0, std::abs(t1));
  while (t < t1 - eps) {
    double next = std::min(t + step, t1);
    if (spec.kind == ConvexCurveSpec::Kind::NCurve) {
      q = ev.at(next);
    } else {
      if (spec.kind == ConvexCurveSpec::Kind::Piecewise) {
        // Stop at the next breakpoint so each step has a constant generator.
        for (const auto& g : spec.grid) {
          double gd = g.get_d();
          if (gd > t + eps && gd < next) {
            next = gd;
            break;
          }
        }
      }
      FMatrix a = ev.taylor(t + 0.5 * (next - t), 1)[1];
      // taylor()[1] = Gamma(mid) A; recover A = Gamma(mid)^T taylor()[1].
      FMatrix gen = ev.taylor(t + 0.5 * (next - t), 0)[0].transpose() * a;
      q = linalg::qr_chart(q * linalg::matrix_exp_float((next - t) * gen));
    }
    t = next;
    out.emplace_back(t, q);
  }
  return out;
}

std::vector<double> m_functions(const FMatrix& q) {
  const int size = static_cast<int>(q.rows());
  std::vector<double> out;
  for (int j = 1; j < size; ++j) {
    std::vector<int> rows, cols;
    for (int r = size - j; r < size; ++r) rows.push_back(r);
    for (int c = 0; c < j; ++c) cols.push_back(c);
    out.push_back(linalg::determinant(q.submatrix(rows, cols)));
  }
  return out;
}

std::vector<Poly> m_functions(const PMatrix& q) {
  const int size = static_cast<int>(q.rows());
  std::vector<Poly> out;
  for (int j = 1; j < size; ++j) {
    std::vector<int> rows, cols;
    for (int r = size - j; r < size; ++r) rows.push_back(r);
    for (int c = 0; c < j; ++c) cols.push_back(c);
    out.push_back(linalg::determinant(q.submatrix(rows, cols)));
  }
  return out;
}

MultVector mult_vector_exact(const spin::SpinWord& z0) {
  const int n = z0.n();
  PMatrix p = spin::pi_so(z0).matrix<Poly>();
  PMatrix tn = linalg::frak_n<Poly>(n);
  tn = Poly::variable() * tn;
  MultVector out;
  for (const auto& m : m_functions(p * linalg::nilpotent_exp(tn))) out.push_back(linalg::root_multiplicity_at_zero(m));
  return out;
}

NumericMult mult_vector_numeric(double t0, const std::vector<std::pair<double, std::vector<double>>>& samples) {
  if (samples.size() < 2) throw DomainError("mult_vector_numeric needs at least two samples");
  const std::size_t n = samples.front().second.size();
  NumericMult r;
  for (std::size_t j = 0; j < n; ++j) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (const auto& [t, m] : samples) {
      if (m.size() != n) throw DomainError("samples have inconsistent lengths");
      if (t == t0) throw DomainError("samples must exclude t0");
      if (m[j] == 0) continue;
      double x = std::log(std::abs(t - t0)), y = std::log(std::abs(m[j]));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++cnt;
    }
    if (cnt < 2) throw DomainError("too few nonzero samples for m_" + std::to_string(j + 1));
    double den = cnt * sxx - sx * sx;
    if (den <= 0) throw DomainError("samples do not span a range of |t - t0|");
    double slope = (cnt * sxy - sx * sy) / den;
    double rounded = std::round(slope);
    r.residual = std::max(r.residual, std::abs(slope - rounded));
    r.mult.push_back(std::max(0, static_cast<int>(rounded)));
  }
  if (r.residual > 0.25)
    throw DomainError("numeric multiplicity fit is noisy (residual " + linalg::to_string(r.residual) + ")");
  return r;
}

PMatrix vandert_matrix(const std::vector<int>& d) {
  const std::size_t k = d.size();
  PMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    if (d[i] < 0) throw DomainError("vandert exponents must be nonnegative");
    Poly p = Poly::monomial(1, d[i]);
    for (std::size_t j = 0; j < k; ++j) {
      m(i, j) = p;
      p = p.derivative();
    }
  }
  return m;
}

}  // namespace lcb::curves
