#include <benchmark/benchmark.h>

#include "crlen/analyzer.hpp"
#include "crlen/congruence.hpp"
#include "crlen/constructions.hpp"
#include "crlen/green.hpp"
#include "crlen/group.hpp"
#include "crlen/oracle.hpp"

namespace {

using namespace crlen;

void BM_ClosureFullTransformationMonoid(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Semigroup s = parse_builtin("T(" + std::to_string(degree) + ")");
    benchmark::DoNotOptimize(s.size());
  }
}
BENCHMARK(BM_ClosureFullTransformationMonoid)->Arg(3)->Arg(4);

void BM_GreenRelations(benchmark::State& state) {
  const Semigroup s = parse_builtin("T(" + std::to_string(state.range(0)) + ")");
  for (auto _ : state) {
    GreenData green = compute_green(s);
    benchmark::DoNotOptimize(green.num_j_classes());
  }
}
BENCHMARK(BM_GreenRelations)->Arg(3)->Arg(4);

void BM_ClassCongruences(benchmark::State& state) {
  const Semigroup s = build_matrix_monoid(2, static_cast<int>(state.range(0)));
  const GreenData green = compute_green(s);
  for (auto _ : state) {
    auto family = ggm_family(s, green);
    benchmark::DoNotOptimize(family.size());
  }
}
BENCHMARK(BM_ClassCongruences)->Arg(2)->Arg(3);

void BM_AnalyzeMatrixMonoid(benchmark::State& state) {
  const Semigroup s = build_matrix_monoid(2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    AnalysisReport report = analyze(s, 0);
    benchmark::DoNotOptimize(report.exists);
  }
}
BENCHMARK(BM_AnalyzeMatrixMonoid)->Arg(2)->Arg(3);

void BM_AnalyzeCosetMonoid(benchmark::State& state) {
  const Semigroup s = parse_builtin("QG(quaternion8)");
  for (auto _ : state) {
    AnalysisReport report = analyze(s, 0);
    benchmark::DoNotOptimize(report.exists);
  }
}
BENCHMARK(BM_AnalyzeCosetMonoid);

void BM_MinNormalGenerators(benchmark::State& state) {
  const Semigroup sg = builtin_group("elementary_abelian", {2, 4});
  const Subgroup g = as_group(sg);
  const NormalSubgroup full = full_subgroup(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_normal_generators(g, full).k);
  }
}
BENCHMARK(BM_MinNormalGenerators);

void BM_ExhaustiveGenerationOracle(benchmark::State& state) {
  const Semigroup sg = builtin_group("elementary_abelian", {2, 4});
  const Subgroup g = as_group(sg);
  const NormalSubgroup full = full_subgroup(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::exhaustive_min_normal_gen(g, full));
  }
}
BENCHMARK(BM_ExhaustiveGenerationOracle);

void BM_NormalSubgroupLattice(benchmark::State& state) {
  const Semigroup sg = parse_builtin("symmetric(4)");
  const Subgroup g = as_group(sg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::all_normal_subgroups(g).size());
  }
}
BENCHMARK(BM_NormalSubgroupLattice);

}  // namespace

BENCHMARK_MAIN();
