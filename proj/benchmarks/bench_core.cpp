#include <benchmark/benchmark.h>

#include "mouldcalc/arbomould.hpp"
#include "mouldcalc/forest.hpp"
#include "mouldcalc/mould.hpp"
#include "mouldcalc/quasishuffle.hpp"
#include "mouldcalc/surjection.hpp"

using namespace mouldcalc;

static void BM_QuasiShuffle(benchmark::State& state) {
    Word u = Word::of({1, 2, 3});
    Word v = Word::of({2, 1, 2});
    for (auto _ : state) {
        // fresh words defeat the pair cache so the recursion is measured
        u.letters[0] = Letter{static_cast<long long>(1 + state.iterations() % 3)};
        benchmark::DoNotOptimize(qsh(u, v));
    }
}
BENCHMARK(BM_QuasiShuffle);

static void BM_InternalCoproduct(benchmark::State& state) {
    std::vector<Word> words = words_of_length(static_cast<std::size_t>(state.range(0)),
                                              {Letter{1}, Letter{2}});
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gamma(words[i]));
        i = (i + 1) % words.size();
    }
}
BENCHMARK(BM_InternalCoproduct)->Arg(3)->Arg(5);

static void BM_Arborify(benchmark::State& state) {
    std::vector<Forest> forests = forests_with_vertices(4, {Letter{1}, Letter{2}});
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(arborify_simple(forests[i]));
        i = (i + 1) % forests.size();
    }
}
BENCHMARK(BM_Arborify);

static void BM_MouldComposition(benchmark::State& state) {
    Mould M = random_rule_mould(1);
    Mould N = random_rule_mould(2);
    Mould comp = mould_comp(M, N);
    std::vector<Word> words = words_of_length(4, {Letter{1}, Letter{2}, Letter{3}});
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(comp.eval(words[i]));
        i = (i + 1) % words.size();
    }
}
BENCHMARK(BM_MouldComposition);

static void BM_FiberOfWeakQuasiShuffle(benchmark::State& state) {
    SplitSurjection phi = SplitSurjection::parse("1224|112334");
    for (auto _ : state) benchmark::DoNotOptimize(fiber_qsh(phi));
}
BENCHMARK(BM_FiberOfWeakQuasiShuffle);

static void BM_CoveringSubforests(benchmark::State& state) {
    Forest f = Forest::parse("1(2(1,2),2)");
    for (auto _ : state) benchmark::DoNotOptimize(covering_subforests(f));
}
BENCHMARK(BM_CoveringSubforests);

BENCHMARK_MAIN();
