#pragma once

#include <string>
#include <vector>

#include "lcb/coxeter/permutation.hpp"
#include "lcb/linalg/generators.hpp"

namespace lcb::spin {

// Signed permutation matrix: row i has d_i at column i^sigma.
struct SignedPermMatrix {
  coxeter::Permutation sigma;
  std::vector<int> signs;

  static SignedPermMatrix identity(int n);

  int n() const { return sigma.n(); }
  int det() const;

  template <class S>
  linalg::Matrix<S> matrix() const {
    return linalg::signed_perm_matrix<S>(sigma.images(), signs);
  }

  friend bool operator==(const SignedPermMatrix&, const SignedPermMatrix&) = default;
};

SignedPermMatrix operator*(const SignedPermMatrix& a, const SignedPermMatrix& b);
std::string to_string(const SignedPermMatrix& p);

}  // namespace lcb::spin
