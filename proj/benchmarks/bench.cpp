#include <benchmark/benchmark.h>

#include "prodmatch/bounds.hpp"
#include "prodmatch/constructions.hpp"
#include "prodmatch/matching.hpp"
#include "prodmatch/montecarlo.hpp"
#include "prodmatch/shifting.hpp"
#include "prodmatch/spectral.hpp"

using namespace prodmatch;

namespace {

void BM_MatchingNumber(benchmark::State& state) {
    ProductSpace space({7, 7}, {2, 1});
    Family family = random_family(space, static_cast<std::uint64_t>(state.range(0)), 17);
    for (auto _ : state) benchmark::DoNotOptimize(matching_number(family).value);
}
BENCHMARK(BM_MatchingNumber)->Arg(16)->Arg(32)->Arg(64);

void BM_MatchingDecision(benchmark::State& state) {
    // cap = 2: decide "nu <= 2" instead of computing nu exactly
    ProductSpace space({7, 7}, {2, 1});
    Family family = random_family(space, static_cast<std::uint64_t>(state.range(0)), 17);
    for (auto _ : state) benchmark::DoNotOptimize(matching_number(family, 2).value);
}
BENCHMARK(BM_MatchingDecision)->Arg(64);

void BM_ShiftFixpoint(benchmark::State& state) {
    ProductSpace space({6, 6}, {2, 2});
    Family family = random_family(space, static_cast<std::uint64_t>(state.range(0)), 29);
    for (auto _ : state) {
        auto [shifted, log] = shift_to_fixpoint(family);
        benchmark::DoNotOptimize(shifted.size() + log.steps.size());
    }
}
BENCHMARK(BM_ShiftFixpoint)->Arg(32)->Arg(128);

void BM_CoverConstruction(benchmark::State& state) {
    ProductSpace space({10, 9, 8}, {3, 3, 1}); // 80640 edges
    for (auto _ : state)
        benchmark::DoNotOptimize(build_cover_family(space, CoverSpec{1, 2}).size());
}
BENCHMARK(BM_CoverConstruction);

void BM_ProductSpectrum(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(product_graph_spectrum({30, 20, 10}, {3, 2, 1}).pairs.size());
}
BENCHMARK(BM_ProductSpectrum);

void BM_MixingAudit(benchmark::State& state) {
    ProductSpace space({7, 4}, {2, 1});
    Family subset = random_family(space, 40, 41);
    for (auto _ : state) benchmark::DoNotOptimize(mixing_audit(subset).holds);
}
BENCHMARK(BM_MixingAudit);

void BM_ConcentrationTrials(benchmark::State& state) {
    ProductSpace space({36, 36}, {1, 1});
    Family cover = build_cover_family(space, CoverSpec{1, 12});
    for (auto _ : state)
        benchmark::DoNotOptimize(
            concentration_run(cover, 2, static_cast<std::uint64_t>(state.range(0)), 7).pass);
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ConcentrationTrials)->Arg(1000);

void BM_CompositionMin(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(composition_min({12, 11, 10, 9}, {3, 2, 1, 3}, 6).value);
}
BENCHMARK(BM_CompositionMin);

} // namespace

BENCHMARK_MAIN();
