#include <benchmark/benchmark.h>

#include <random>

#include "lcb/bruhat/bruhat.hpp"
#include "lcb/curves/curves.hpp"
#include "lcb/totpos/totpos.hpp"

using namespace lcb;
using coxeter::Permutation;

namespace {

Permutation random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> v(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i) + 1;
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

spin::SpinWord random_spin(std::mt19937_64& rng, int n) {
  std::vector<int> exps(static_cast<std::size_t>(n));
  for (auto& e : exps) e = static_cast<int>(rng() & 1);
  return {spin::Quat::from_exps(n, rng() & 1 ? 1 : -1, exps), random_perm(rng, n)};
}

linalg::FMatrix random_orthogonal(std::mt19937_64& rng, std::size_t size) {
  std::normal_distribution<double> g;
  linalg::FMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) m(i, j) = g(rng);
  return linalg::qr_chart(m);
}

}  // namespace

static void BM_SpinMul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<spin::SpinWord> zs;
  for (int k = 0; k < 64; ++k) zs.push_back(random_spin(rng, n));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(spin::spin_mul(zs[k % 64], zs[(k + 1) % 64]));
    ++k;
  }
}
BENCHMARK(BM_SpinMul)->Arg(4)->Arg(8)->Arg(16);

static void BM_Decompose(benchmark::State& state) {
  std::mt19937_64 rng(2);
  auto q = random_orthogonal(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bruhat::signed_bruhat_decompose(q));
}
BENCHMARK(BM_Decompose)->Arg(4)->Arg(8)->Arg(16);

static void BM_DecomposeExact(benchmark::State& state) {
  std::mt19937_64 rng(3);
  auto q = linalg::to_rational(random_orthogonal(rng, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(bruhat::signed_bruhat_decompose_exact(q));
}
BENCHMARK(BM_DecomposeExact)->Arg(4)->Arg(6);

static void BM_PosFactorize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto eta = Permutation::longest(n);
  auto word = coxeter::canonical_reduced_word(eta);
  totpos::PosParams p{word, {}};
  for (std::size_t k = 0; k < word.size(); ++k) p.times.emplace_back(static_cast<long>(k % 3 + 1), 2);
  for (auto& t : p.times) t.canonicalize();
  auto l = totpos::pos_from_params(n, p);
  for (auto _ : state) benchmark::DoNotOptimize(totpos::pos_factorize(l, word));
}
BENCHMARK(BM_PosFactorize)->Arg(2)->Arg(3)->Arg(4);

static void BM_MultVectorExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(4);
  auto z0 = spin::acute(random_perm(rng, n));
  for (auto _ : state) benchmark::DoNotOptimize(curves::mult_vector_exact(z0));
}
BENCHMARK(BM_MultVectorExact)->Arg(3)->Arg(5)->Arg(7);
BENCHMARK_MAIN();
