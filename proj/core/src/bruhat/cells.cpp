#include <cmath>
#include <numbers>

#include "lcb/bruhat/bruhat.hpp"
#include "lcb/error.hpp"
#include "lcb/linalg/generators.hpp"

namespace lcb::bruhat {

using coxeter::inv;

namespace {

void check_angle(double theta) {
  if (!(theta > 0 && theta < std::numbers::pi)) throw DomainError("angle must lie in (0, pi)");
}

int rank_of(const FMatrix& q) {
  if (!q.square() || q.rows() < 2) throw RankMismatch("expected a square matrix of size >= 2");
  return static_cast<int>(q.rows()) - 1;
}

}  // namespace

FMatrix alpha(int n, int j, double theta) {
  linalg::check_generator(n, j);
  FMatrix m = FMatrix::identity(static_cast<std::size_t>(n) + 1);
  auto a = static_cast<std::size_t>(j) - 1;
  double c = std::cos(theta), s = std::sin(theta);
  m(a, a) = c;
  m(a, a + 1) = -s;
  m(a + 1, a) = s;
  m(a + 1, a + 1) = c;
  return m;
}

FMatrix phi(const FMatrix& q, int j, int eps, double theta) {
  check_angle(theta);
  if (eps != 1 && eps != -1) throw DomainError("eps must be +-1");
  return q * alpha(rank_of(q), j, eps * theta);
}

FMatrix psi(const Quat& q, const ReducedWord& word, const std::vector<int>& signs, const std::vector<double>& thetas) {
  if (word.size() != signs.size() || word.size() != thetas.size())
    throw DomainError("psi: word, signs and angles differ in length");
  const int n = q.n();
  if (!coxeter::is_reduced(n, word)) throw DomainError("psi needs a reduced word");
  FMatrix m = spin::pi_so(spin::SpinWord::from_quat(q)).matrix<double>();
  for (std::size_t k = 0; k < word.size(); ++k) {
    check_angle(thetas[k]);
    if (signs[k] != 1 && signs[k] != -1) throw DomainError("psi: signs must be +-1");
    m = m * alpha(n, word[k], signs[k] * thetas[k]);
  }
  return m;
}

double theta_j(const FMatrix& q, int j, double tol) {
  const int n = rank_of(q);
  linalg::check_generator(n, j);
  Decomposition d = signed_bruhat_decompose(q, tol);
  const Permutation& s0 = d.P.sigma;
  if (inv(coxeter::right_mul_gen(s0, j)) > inv(s0))
    throw DomainError("theta_j: cell permutation " + coxeter::to_string(s0) + " does not end in a_" + std::to_string(j));
  auto a = static_cast<std::size_t>(j) - 1;
  return std::atan2(d.U2(a, a), d.U2(a, a + 1));
}

FMatrix projective_act(const FMatrix& u, const FMatrix& q) {
  return linalg::qr_chart(linalg::inverse_upper(u) * q);
}

std::vector<std::pair<int, int>> slice_free_positions(const Permutation& sigma) {
  Permutation sinv = coxeter::inverse(sigma);
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= sigma.size(); ++i)
    for (int j = 1; j < sigma(i); ++j)
      if (sinv(j) < i) out.emplace_back(i, j);
  return out;
}

SliceCoords slice_coords(const SpinWord& z0, const FMatrix& q, double tol) {
  const int n = rank_of(q);
  if (z0.n() != n) throw RankMismatch("slice_coords: rank mismatch");
  const Permutation& sigma = z0.sigma;
  if (sigma == Permutation::longest(n)) throw DomainError("slice_coords: the open cell has no transversal slice");
  FMatrix p0 = spin::pi_so(z0).matrix<double>();
  FMatrix l = linalg::lu_chart(p0.transpose() * q, tol);

  // L = L1 L2 with L1 supported on Inv(sigma^-1) (transposed) and L2 on the
  // complement, solved one subdiagonal at a time.
  Permutation sinv = coxeter::inverse(sigma);
  const std::size_t m = static_cast<std::size_t>(n) + 1;
  FMatrix l1 = FMatrix::identity(m), l2 = FMatrix::identity(m);
  for (std::size_t d = 1; d < m; ++d)
    for (std::size_t j = 0; j + d < m; ++j) {
      std::size_t i = j + d;
      double v = l(i, j);
      for (std::size_t k = j + 1; k < i; ++k) v -= l1(i, k) * l2(k, j);
      bool in_first = sinv(static_cast<int>(j) + 1) > sinv(static_cast<int>(i) + 1);
      (in_first ? l1 : l2)(i, j) = v;
    }

  SliceCoords out;
  FMatrix u1 = p0 * l1 * p0.transpose();
  for (auto [i, j] : coxeter::inversions(sigma))
    out.u.push_back(u1(static_cast<std::size_t>(i) - 1, static_cast<std::size_t>(j) - 1));
  for (auto [i, j] : slice_free_positions(sigma))
    out.x.push_back(l2(static_cast<std::size_t>(sigma(i)) - 1, static_cast<std::size_t>(j) - 1));
  return out;
}

SpinWord freesign_cell(int n, const ReducedWord& word, const std::vector<linalg::Rational>& times) {
  if (word.size() != times.size()) throw DomainError("freesign_cell: word and times differ in length");
  if (!coxeter::is_reduced(n, word)) throw DomainError("freesign_cell needs a reduced word");
  SpinWord z = SpinWord::identity(n);
  for (std::size_t k = 0; k < word.size(); ++k) {
    int s = sgn(times[k]);
    if (s == 0) throw DomainError("freesign_cell: zero time entry");
    z = spin::spin_mul(z, s > 0 ? SpinWord::acute_gen(n, word[k]) : SpinWord::grave_gen(n, word[k]));
  }
  return z;
}

SignedPermMatrix adv_point(const FMatrix& q, double tol) {
  return spin::pi_so(spin::adv_label(spin::lift(cell_of(q, tol))));
}

SignedPermMatrix chop_point(const FMatrix& q, double tol) {
  return spin::pi_so(spin::chop_label(spin::lift(cell_of(q, tol))));
}

FMatrix ConnectingCurve::at(double t) const {
  const int n = static_cast<int>(base.rows()) - 1;
  FMatrix g0 = linalg::matrix_exp_float((std::numbers::pi * t) * linalg::frak_h(n));
  return base * linalg::qr_chart(u1 * g0);
}

std::vector<std::pair<double, FMatrix>> ConnectingCurve::sample(int count) const {
  if (count < 2) throw DomainError("need at least two samples");
  std::vector<std::pair<double, FMatrix>> out;
  for (int i = 0; i < count; ++i) {
    double t = static_cast<double>(i) / (count - 1);
    out.emplace_back(t, at(t));
  }
  return out;
}

ConnectingCurve connect_through(const FMatrix& q, double tol) {
  const int n = rank_of(q);
  SignedPermMatrix p = cell_of(q, tol);
  if (p.sigma != Permutation::longest(n)) throw DomainError("connect_through: point is not in an open cell");
  SpinWord z = spin::lift(p);
  FMatrix base = spin::pi_so(SpinWord::from_quat(z.q)).matrix<double>();
  Decomposition d = signed_bruhat_decompose(base.transpose() * q, tol);
  return ConnectingCurve{base, d.U1};
}

}  // namespace lcb::bruhat
