#include <benchmark/benchmark.h>

#include <random>

#include "foxhom/covers.hpp"
#include "foxhom/families.hpp"
#include "foxhom/smith.hpp"

using namespace foxhom;

namespace {

IntMatrix random_matrix(std::size_t n, int max_entry, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-max_entry, max_entry);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entry(rng);
  }
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  IntMatrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 50, 4242);
  for (auto _ : state) {
    benchmark::DoNotOptimize(smith_normal_form(a));
  }
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

void BM_MinorOracle(benchmark::State& state) {
  IntMatrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 10, 77);
  for (auto _ : state) {
    benchmark::DoNotOptimize(invariant_factors_via_minors(a));
  }
}
BENCHMARK(BM_MinorOracle)->Arg(4)->Arg(6);

void BM_SubgroupH1Fox(benchmark::State& state) {
  std::int64_t p = state.range(0);
  Presentation g = build({Family::BaumslagSolitar, 2 * p + 1, 2 * p + 3, 1, {}});
  PermRep rep = PermRep::validate(g, {Permutation(2), Permutation::transposition(2, 0, 1)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(subgroup_h1_fox(g, rep));
  }
}
BENCHMARK(BM_SubgroupH1Fox)->Arg(10)->Arg(50)->Arg(200);

void BM_ReidemeisterSchreier(benchmark::State& state) {
  std::int64_t p = state.range(0);
  Presentation g = build({Family::BaumslagSolitar, 2 * p + 1, 2 * p + 3, 1, {}});
  PermRep rep = PermRep::validate(g, {Permutation(2), Permutation::transposition(2, 0, 1)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(subgroup_h1_rs(g, rep));
  }
}
BENCHMARK(BM_ReidemeisterSchreier)->Arg(10)->Arg(50)->Arg(200);

void BM_CoverChain(benchmark::State& state) {
  std::int64_t p = state.range(0);
  Presentation g = build({Family::BaumslagSolitar, 2 * p + 1, 2 * p + 3, 1, {}});
  PermRep rep = PermRep::validate(g, {Permutation(2), Permutation::transposition(2, 0, 1)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(cover_chain_h1(g, rep));
  }
}
BENCHMARK(BM_CoverChain)->Arg(10)->Arg(50)->Arg(200);

void BM_ScanRow(benchmark::State& state) {
  std::vector<FamilyInstance> one{{Family::BaumslagStrebel, 12, 14, 7, {}}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_family(one));
  }
}
BENCHMARK(BM_ScanRow);

}  // namespace

BENCHMARK_MAIN();
