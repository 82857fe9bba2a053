#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "lcb/coxeter/permutation.hpp"
#include "lcb/linalg/dense.hpp"
#include "lcb/spin/spin_word.hpp"
#include "lcb/totpos/totpos.hpp"

namespace lcb::testing {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline coxeter::Permutation random_perm(Rng& rng, int n) {
  std::vector<int> im(static_cast<std::size_t>(n) + 1);
  std::iota(im.begin(), im.end(), 1);
  std::shuffle(im.begin(), im.end(), rng);
  return coxeter::Permutation(im);
}

// Random reduced word of sigma: strip a random last letter each step.
inline coxeter::ReducedWord random_word_of(Rng& rng, coxeter::Permutation s) {
  coxeter::ReducedWord w;
  while (coxeter::inv(s) > 0) {
    std::vector<int> desc;
    for (int i = 1; i <= s.n(); ++i)
      if (coxeter::inv(coxeter::right_mul_gen(s, i)) < coxeter::inv(s)) desc.push_back(i);
    int i = desc[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(desc.size()) - 1))];
    w.insert(w.begin(), i);
    s = coxeter::right_mul_gen(s, i);
  }
  return w;
}

inline coxeter::ReducedWord random_reduced_word(Rng& rng, int n) { return random_word_of(rng, random_perm(rng, n)); }

inline spin::Quat random_quat(Rng& rng, int n) {
  auto bits = static_cast<std::uint32_t>(uniform_int(rng, 0, (1 << n) - 1));
  return spin::Quat(n, uniform_int(rng, 0, 1) ? 1 : -1, bits);
}

inline spin::SpinWord random_spin(Rng& rng, int n) { return {random_quat(rng, n), random_perm(rng, n)}; }

inline linalg::Rational random_positive(Rng& rng) {
  linalg::Rational q(uniform_int(rng, 1, 20), uniform_int(rng, 1, 20));
  q.canonicalize();
  return q;
}

inline totpos::PosParams random_params(Rng& rng, const coxeter::ReducedWord& w) {
  totpos::PosParams p{w, {}};
  for (std::size_t k = 0; k < w.size(); ++k) p.times.push_back(random_positive(rng));
  return p;
}

inline linalg::FMatrix random_matrix(Rng& rng, std::size_t size) {
  std::normal_distribution<double> g;
  linalg::FMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) m(i, j) = g(rng);
  return m;
}

inline linalg::FMatrix random_upper_positive(Rng& rng, std::size_t size) {
  std::uniform_real_distribution<double> u(-1, 1), d(0.5, 2);
  linalg::FMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    m(i, i) = d(rng);
    for (std::size_t j = i + 1; j < size; ++j) m(i, j) = u(rng);
  }
  return m;
}

inline linalg::FMatrix random_orthogonal(Rng& rng, std::size_t size) {
  return linalg::qr_chart(random_matrix(rng, size));
}

}  // namespace lcb::testing
