#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcb/coxeter/permutation.hpp"
#include "lcb/linalg/exterior.hpp"
#include "lcb/linalg/matrix.hpp"

// Totally positive strata Pos_sigma (and Neg_sigma = X Pos_sigma X) of the
// unit lower-triangular group, all in exact rational arithmetic.
namespace lcb::totpos {

using coxeter::Permutation;
using coxeter::ReducedWord;
using linalg::IndexSet;
using linalg::Rational;
using linalg::RMatrix;

struct PosParams {
  ReducedWord word;
  std::vector<Rational> times;
};

struct PosCellLabel {
  Permutation sigma;
  bool positive = true;
  friend bool operator==(const PosCellLabel&, const PosCellLabel&) = default;
};

// lambda_{i1}(t1) ... lambda_{ik}(tk)
RMatrix pos_from_params(int n, const PosParams& p);

struct Transition {
  Rational s1, s2, s3;
};
// lambda_i(t1) lambda_{i+1}(t2) lambda_i(t3) = lambda_{i+1}(s1) lambda_i(s2) lambda_{i+1}(s3)
Transition ababab_transition(const Rational& t1, const Rational& t2, const Rational& t3);

// Is there a path i0 -> i1 whose letters form a subword of a reduced word of sigma?
bool path_exists(const IndexSet& i0, const IndexSet& i1, const Permutation& sigma);
// Every i1 reachable from i0 that way.
std::vector<IndexSet> reachable(const IndexSet& i0, const Permutation& sigma);

// Pairs (i0, i1) with i1 <= i0 elementwise, for k = 1..n, in (k, i0, i1) order.
struct MinorIndex {
  IndexSet rows, cols;
};
const std::vector<MinorIndex>& lower_minor_indices(int n);

// Empty when L is in Pos_sigma, otherwise a description of the first bad minor.
std::optional<std::string> membership_violation(const RMatrix& l, const Permutation& sigma);
bool pos_membership(const RMatrix& l, const Permutation& sigma);
bool neg_membership(const RMatrix& l, const Permutation& sigma);

// The stratum of closure(Pos_eta) or closure(Neg_eta) containing L, if any.
std::optional<PosCellLabel> cell_of_closure(const RMatrix& l);

// Exact inverse of pos_from_params for a known reduced word.
std::vector<Rational> pos_factorize(const RMatrix& l, const ReducedWord& w);

bool leq(const RMatrix& l0, const RMatrix& l1);
bool ll(const RMatrix& l0, const RMatrix& l1);
RMatrix neg_mirror(const RMatrix& l);

// The minor whose first derivative detects leaving Pos_sigma along a convex
// curve: k minimal with (n-k+2)^sigma != k, j = (n-k+2)^sigma - 1.
struct SpeedMinor {
  int k = 0;
  int j = 0;
  IndexSet i0, i1, i2;
};
SpeedMinor positive_speed_minor(const Permutation& sigma);

}  // namespace lcb::totpos
