#include <benchmark/benchmark.h>

#include <random>

#include "xorsym/families.hpp"
#include "xorsym/obdd.hpp"
#include "xorsym/oracle.hpp"
#include "xorsym/space.hpp"
#include "xorsym/symmetry.hpp"

namespace {

using namespace xorsym;

void BM_SymmetryBasisXorChain(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Circuit c = xor_chain_circuit(n);
  const Obdd d = compile(c, c.input_names());
  for (auto _ : state) benchmark::DoNotOptimize(symmetry_basis(d));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SymmetryBasisXorChain)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_SymmetryBasisLinearMap(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::size_t m = std::min<std::size_t>(8, n / 2);
  const Circuit c = linear_map_circuit(random_matrix(m, n, 42), n);
  const Obdd d = compile(c, c.input_names());
  for (auto _ : state) benchmark::DoNotOptimize(symmetry_basis(d));
}
BENCHMARK(BM_SymmetryBasisLinearMap)->RangeMultiplier(2)->Range(8, 32);

void BM_CompileXorChain(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Circuit c = xor_chain_circuit(n);
  for (auto _ : state) benchmark::DoNotOptimize(compile(c, c.input_names()));
}
BENCHMARK(BM_CompileXorChain)->RangeMultiplier(2)->Range(8, 128);

void BM_SubspaceIntersect(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  const auto random_space = [&rng, d] {
    std::vector<BitVec> rows;
    for (std::size_t k = 0; k < d / 2; ++k) {
      BitVec v(d);
      for (std::size_t i = 0; i < d; ++i)
        if (rng() & 1) v.set(i, true);
      rows.push_back(std::move(v));
    }
    return Subspace::span(rows, d);
  };
  const Subspace a = random_space();
  const Subspace b = random_space();
  for (auto _ : state) benchmark::DoNotOptimize(intersect(a, b));
}
BENCHMARK(BM_SubspaceIntersect)->Arg(16)->Arg(64)->Arg(256);

void BM_BruteForceSpace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Circuit c = xor_chain_circuit(n);
  const Evaluable fn = make_evaluable(c);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_space(fn, n));
}
BENCHMARK(BM_BruteForceSpace)->DenseRange(8, 12, 2);

}  // namespace

BENCHMARK_MAIN();
