#include "kodaira/moduli/moduli.hpp"
#include "kodaira/reallocus/reallocus.hpp"
#include "kodaira/sampling.hpp"

#include <benchmark/benchmark.h>

using namespace kodaira;

namespace {

// Collection of random words of a fixed length.
void BM_Collect(benchmark::State& state) {
    const int len = static_cast<int>(state.range(0));
    Sampler s(7);
    std::vector<GroupWord> words;
    for (int i = 0; i < 256; ++i) words.push_back(s.word(len, 4));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(collect(words[i++ % words.size()], 3));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Collect)->Arg(4)->Arg(12)->Arg(48);

// Collection checked against direct affine composition.
void BM_WordToAffine(benchmark::State& state) {
    Sampler s(8);
    KodairaParams p = s.params(3);
    GroupWord w = s.word(12, 4);
    for (auto _ : state) benchmark::DoNotOptimize(word_to_affine(w, p));
}
BENCHMARK(BM_WordToAffine);

// Reduction of every catalog extension at one m.
void BM_ReduceCatalog(benchmark::State& state) {
    std::vector<Extension> exts;
    for (const auto& rep : enumerate_cases(static_cast<int>(state.range(0)))) exts.push_back(extension_of(rep.rs));
    for (auto _ : state)
        for (const auto& e : exts) benchmark::DoNotOptimize(reduce(e));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(exts.size()));
}
BENCHMARK(BM_ReduceCatalog)->Arg(1)->Arg(2);

void BM_SplittingWitness(benchmark::State& state) {
    Extension e = extension_of(representative(CaseLabel::A1aip, 2));
    for (auto _ : state) benchmark::DoNotOptimize(splitting_witness(e));
}
BENCHMARK(BM_SplittingWitness);

void BM_RealPart(benchmark::State& state) {
    RealStructure rs = representative(CaseLabel::A1aip, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(real_part(rs));
}
BENCHMARK(BM_RealPart)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_FullTable(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(full_table(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FullTable)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_RealityConditions(benchmark::State& state) {
    Sampler s(9);
    Lifting l = s.lifting(LinearCase::B, true);
    auto points = s.locus_sample(LinearCase::B, true, 64);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(reality_conditions(l, points[i++ % points.size()]));
}
BENCHMARK(BM_RealityConditions);

}  // namespace
BENCHMARK_MAIN();
