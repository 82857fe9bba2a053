#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcb/linalg/matrix.hpp"

namespace lcb::linalg {

// Sorted k-subset of {1..size}, 1-based.
struct IndexSet {
  std::vector<int> elems;

  int sum() const;
  std::size_t size() const { return elems.size(); }
  bool contains(int v) const;
  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  // (sum, then lexicographic) ordering used for exterior-power bases.
  friend bool operator<(const IndexSet& a, const IndexSet& b);
};

std::string to_string(const IndexSet& s);

// All k-subsets of {1..size} in (sum, lex) order.
std::vector<IndexSet> index_sets(int size, int k);

// a <= b elementwise after sorting.
bool elementwise_leq(const IndexSet& a, const IndexSet& b);

// from ->^j to: j in to, j+1 not in to, from = to - {j} + {j+1}.
std::optional<IndexSet> arrow_step(const IndexSet& from, int j);

template <class S>
S minor(const Matrix<S>& m, const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() != cols.size()) throw RankMismatch("minor needs equal-size index sets");
  std::vector<int> r, c;
  for (int v : rows.elems) {
    if (v < 1 || v > static_cast<int>(m.rows())) throw DomainError("minor row index out of range");
    r.push_back(v - 1);
  }
  for (int v : cols.elems) {
    if (v < 1 || v > static_cast<int>(m.cols())) throw DomainError("minor column index out of range");
    c.push_back(v - 1);
  }
  return determinant(m.submatrix(r, c));
}

template <class S>
Matrix<S> exterior_power(const Matrix<S>& m, int k) {
  if (!m.square()) throw RankMismatch("exterior power of a non-square matrix");
  int size = static_cast<int>(m.rows());
  if (k < 0 || k > size) throw DomainError("exterior power degree out of range");
  auto basis = index_sets(size, k);
  Matrix<S> r(basis.size(), basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) r(a, b) = minor(m, basis[a], basis[b]);
  return r;
}

}  // namespace lcb::linalg
