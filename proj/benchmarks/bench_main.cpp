#include <benchmark/benchmark.h>

#include "pealab/corpus.hpp"
#include "pealab/homlattice.hpp"
#include "pealab/riesz.hpp"
#include "pealab/statespace.hpp"

using namespace pealab;

static void BM_Validate(benchmark::State& st) {
  const auto t = corpus::mo(3);
  for (auto _ : st) benchmark::DoNotOptimize(validate_axioms(t).passed());
}
BENCHMARK(BM_Validate);

static void BM_RieszLadder(benchmark::State& st) {
  const auto t = st.range(0) == 0 ? corpus::boolean(3) : corpus::mo(3);
  for (auto _ : st) benchmark::DoNotOptimize(ladder_report(t).ladder_consistent());
}
BENCHMARK(BM_RieszLadder)->Arg(0)->Arg(1);

static void BM_StatePolytope(benchmark::State& st) {
  const auto t = st.range(0) == 0 ? corpus::boolean(3) : corpus::mo(3);
  for (auto _ : st) benchmark::DoNotOptimize(state_polytope(t).vertices.size());
}
BENCHMARK(BM_StatePolytope)->Arg(0)->Arg(1);

static void BM_RepresentingMeasures(benchmark::State& st) {
  const auto p = state_polytope(corpus::mo(3));
  RationalRng rng(1);
  const auto s = random_interior_state(p, rng);
  for (auto _ : st) benchmark::DoNotOptimize(representing_measures(p, s).primary.weights.size());
}
BENCHMARK(BM_RepresentingMeasures);

static void BM_Decompositions(benchmark::State& st) {
  const auto g = PoGroupPresentation::free_abelian(2, StandardCone{});
  const auto k = static_cast<std::int64_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_decompositions(g, GroupElement{{k, k}}).parts.size());
}
BENCHMARK(BM_Decompositions)->Arg(2)->Arg(4)->Arg(6);

static void BM_SupHoms(benchmark::State& st) {
  const auto g = PoGroupPresentation::free_abelian(3, StandardCone{});
  const std::vector<GroupHom> fs{{{1, -2, 3}}, {{-1, 2, 0}}, {{0, 1, -1}}};
  for (auto _ : st) benchmark::DoNotOptimize(sup_homs(g, fs, GroupElement{{4, 4, 4}}));
}
BENCHMARK(BM_SupHoms);
BENCHMARK_MAIN();
