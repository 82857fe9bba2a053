#include "lcb/totpos/totpos.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "lcb/error.hpp"
#include "lcb/linalg/generators.hpp"

namespace lcb::totpos {

using linalg::minor;

namespace {

void check_lower_unitriangular(const RMatrix& l) {
  if (!linalg::is_lower_unitriangular(l)) throw DomainError("expected a unit lower-triangular matrix");
}

int rank_of(const RMatrix& l) {
  check_lower_unitriangular(l);
  if (l.rows() < 2) throw DomainError("matrix too small");
  return static_cast<int>(l.rows()) - 1;
}

// Sign pattern of all lower minors: 1 positive, 0 zero, -1 negative.
std::vector<int> minor_signs(const RMatrix& l) {
  const auto& idx = lower_minor_indices(rank_of(l));
  std::vector<int> out;
  out.reserve(idx.size());
  for (const auto& m : idx) out.push_back(sgn(minor(l, m.rows, m.cols)));
  return out;
}

std::vector<int> path_pattern(const Permutation& sigma) {
  const auto& idx = lower_minor_indices(sigma.n());
  std::vector<int> out;
  out.reserve(idx.size());
  const IndexSet* last = nullptr;
  std::set<std::vector<int>> reach;
  for (const auto& m : idx) {
    if (!last || !(*last == m.rows)) {
      reach.clear();
      for (auto& s : reachable(m.rows, sigma)) reach.insert(s.elems);
      last = &m.rows;
    }
    out.push_back(reach.count(m.cols.elems) ? 1 : 0);
  }
  return out;
}

}  // namespace

RMatrix pos_from_params(int n, const PosParams& p) {
  if (p.word.size() != p.times.size()) throw DomainError("word and times differ in length");
  RMatrix l = RMatrix::identity(static_cast<std::size_t>(n) + 1);
  for (std::size_t k = 0; k < p.word.size(); ++k) l = l * linalg::lambda<Rational>(n, p.word[k], p.times[k]);
  return l;
}

Transition ababab_transition(const Rational& t1, const Rational& t2, const Rational& t3) {
  Rational d = t1 + t3;
  if (sgn(d) == 0) throw DomainError("ababab transition needs t1 + t3 != 0");
  return {Rational(t2 * t3 / d), d, Rational(t1 * t2 / d)};
}

std::vector<IndexSet> reachable(const IndexSet& i0, const Permutation& sigma) {
  std::set<std::vector<int>> cur{i0.elems};
  for (int j : coxeter::canonical_reduced_word(sigma)) {
    std::vector<std::vector<int>> add;
    for (const auto& s : cur)
      if (auto t = linalg::arrow_step(IndexSet{s}, j)) add.push_back(t->elems);
    cur.insert(add.begin(), add.end());
  }
  std::vector<IndexSet> out;
  for (const auto& s : cur) out.push_back(IndexSet{s});
  return out;
}

bool path_exists(const IndexSet& i0, const IndexSet& i1, const Permutation& sigma) {
  if (i0.size() != i1.size()) return false;
  for (const auto& s : reachable(i0, sigma))
    if (s == i1) return true;
  return false;
}

const std::vector<MinorIndex>& lower_minor_indices(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<MinorIndex>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<MinorIndex> out;
  for (int k = 1; k <= n; ++k) {
    auto sets = linalg::index_sets(n + 1, k);
    for (const auto& r : sets)
      for (const auto& c : sets)
        if (linalg::elementwise_leq(c, r)) out.push_back({r, c});
  }
  return cache.emplace(n, std::move(out)).first->second;
}

std::optional<std::string> membership_violation(const RMatrix& l, const Permutation& sigma) {
  if (rank_of(l) != sigma.n()) throw RankMismatch("matrix and permutation of different rank");
  const auto& idx = lower_minor_indices(sigma.n());
  auto got = minor_signs(l);
  auto want = path_pattern(sigma);
  for (std::size_t i = 0; i < idx.size(); ++i)
    if (got[i] != want[i])
      return "minor " + linalg::to_string(idx[i].rows) + "x" + linalg::to_string(idx[i].cols) + " has sign " +
             std::to_string(got[i]) + ", expected " + std::to_string(want[i]);
  return std::nullopt;
}

bool pos_membership(const RMatrix& l, const Permutation& sigma) { return !membership_violation(l, sigma); }

bool neg_membership(const RMatrix& l, const Permutation& sigma) { return pos_membership(neg_mirror(l), sigma); }

std::optional<PosCellLabel> cell_of_closure(const RMatrix& l) {
  const int n = rank_of(l);
  static std::mutex mu;
  static std::map<int, std::map<std::vector<int>, Permutation>> tables;
  const std::map<std::vector<int>, Permutation>* table;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto& t = tables[n];
    if (t.empty())
      for (const auto& s : coxeter::all_permutations(n)) t.emplace(path_pattern(s), s);
    table = &t;
  }
  for (bool positive : {true, false}) {
    auto signs = minor_signs(positive ? l : neg_mirror(l));
    auto it = table->find(signs);
    if (it != table->end()) return PosCellLabel{it->second, positive};
  }
  return std::nullopt;
}

std::vector<Rational> pos_factorize(const RMatrix& l, const ReducedWord& w) {
  const int n = rank_of(l);
  if (!coxeter::is_reduced(n, w)) throw DomainError("pos_factorize needs a reduced word");
  std::vector<Rational> times(w.size());
  RMatrix cur = l;
  Permutation sigma = coxeter::evaluate_word(n, w);
  for (std::size_t k = w.size(); k-- > 0;) {
    const int j = w[k];
    Permutation prev = coxeter::right_mul_gen(sigma, j);
    // Find a minor positive on Pos_sigma, zero on Pos_prev, with column j in
    // and column j+1 out; it is affine in the peeled parameter.
    std::optional<MinorIndex> pick;
    const IndexSet* rows = nullptr;
    std::set<std::vector<int>> now, before;
    for (const auto& m : lower_minor_indices(n)) {
      if (!m.cols.contains(j) || m.cols.contains(j + 1)) continue;
      if (!rows || !(*rows == m.rows)) {
        rows = &m.rows;
        now.clear();
        before.clear();
        for (auto& s : reachable(m.rows, sigma)) now.insert(s.elems);
        for (auto& s : reachable(m.rows, prev)) before.insert(s.elems);
      }
      if (now.count(m.cols.elems) && !before.count(m.cols.elems)) {
        pick = m;
        break;
      }
    }
    if (!pick) throw Error("pos_factorize: no distinguishing minor");
    IndexSet shifted = pick->cols;
    for (auto& v : shifted.elems)
      if (v == j) v = j + 1;
    Rational a = minor(cur, pick->rows, pick->cols);
    Rational b = minor(cur, pick->rows, shifted);
    if (sgn(b) == 0) throw DomainError("pos_factorize: matrix is not in Pos_sigma (degenerate minor)");
    Rational t = a / b;
    if (sgn(t) <= 0) throw DomainError("pos_factorize: peeled parameter " + t.get_str() + " is not positive");
    times[k] = t;
    cur = cur * linalg::lambda<Rational>(n, j, Rational(-t));
    sigma = prev;
  }
  if (!(cur == RMatrix::identity(static_cast<std::size_t>(n) + 1)))
    throw DomainError("pos_factorize: residue is not the identity; matrix is not in Pos_sigma");
  return times;
}

bool leq(const RMatrix& l0, const RMatrix& l1) {
  auto signs = minor_signs(linalg::inverse_lower_unitriangular(l0) * l1);
  for (int s : signs)
    if (s < 0) return false;
  return true;
}

bool ll(const RMatrix& l0, const RMatrix& l1) {
  auto signs = minor_signs(linalg::inverse_lower_unitriangular(l0) * l1);
  for (int s : signs)
    if (s <= 0) return false;
  return true;
}

RMatrix neg_mirror(const RMatrix& l) {
  const int n = rank_of(l);
  RMatrix x = linalg::alternating_sign<Rational>(n);
  return x * l * x;
}

SpeedMinor positive_speed_minor(const Permutation& sigma) {
  const int n = sigma.n();
  int k = 1;
  while (k <= n + 1 && sigma(n - k + 2) == k) ++k;
  if (k > n + 1) throw DomainError("positive_speed_minor: sigma = eta has no such minor");
  SpeedMinor r;
  r.k = k;
  r.j = sigma(n - k + 2) - 1;
  for (int v = n - k + 2; v <= n + 1; ++v) r.i0.elems.push_back(v);
  for (int v = 1; v < k; ++v) {
    r.i1.elems.push_back(v);
    r.i2.elems.push_back(v);
  }
  r.i1.elems.push_back(r.j + 1);
  r.i2.elems.push_back(r.j);
  std::sort(r.i1.elems.begin(), r.i1.elems.end());
  std::sort(r.i2.elems.begin(), r.i2.elems.end());
  return r;
}

}  // namespace lcb::totpos
