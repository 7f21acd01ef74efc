#include <benchmark/benchmark.h>

#include "hitkit/generators.hpp"
#include "hitkit/gf2.hpp"
#include "hitkit/pit.hpp"
#include "hitkit/random.hpp"
#include "hitkit/simulations.hpp"
#include "hitkit/verifiers.hpp"

namespace {

using namespace hitkit;

PseudomonomialSum random_sum(Var n, std::size_t terms, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<RawTerm> raw;
    for (std::size_t t = 0; t < terms; ++t) {
        RawTerm term{1, {}};
        for (Var v = 1; v <= n; ++v)
            if (rng.below(4) == 0) term.factors.push_back(rng.coin() ? v : -static_cast<long long>(v));
        raw.push_back(std::move(term));
    }
    return normalize(raw, n, Field::gf2());
}

void BM_PitCheck(benchmark::State& state) {
    const auto sum = random_sum(64, static_cast<std::size_t>(state.range(0)), kDefaultSeed);
    PitOptions options;
    options.audit = false;
    for (auto _ : state) benchmark::DoNotOptimize(pit_check(sum, 0, options));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PitCheck)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond);

void BM_Echelonize(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    SplitMix64 rng(kDefaultSeed);
    AffineSystem s(n);
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<Var> vars;
        for (Var v = 1; v <= n; ++v)
            if (rng.coin()) vars.push_back(v);
        s.add_equation(vars, rng.coin());
    }
    for (auto _ : state) benchmark::DoNotOptimize(echelonize(s));
}
BENCHMARK(BM_Echelonize)->RangeMultiplier(4)->Range(16, 1024);

void BM_IsHitting(benchmark::State& state) {
    const Cnf h = random_tree_hitting(24, static_cast<std::size_t>(state.range(0)), kDefaultSeed).formula;
    for (auto _ : state) benchmark::DoNotOptimize(is_hitting(h));
    state.counters["clauses"] = static_cast<double>(h.size());
}
BENCHMARK(BM_IsHitting)->RangeMultiplier(4)->Range(64, 4096);

void BM_HittingToTree(benchmark::State& state) {
    const Cnf h = random_tree_hitting(24, static_cast<std::size_t>(state.range(0)), kDefaultSeed).formula;
    for (auto _ : state) benchmark::DoNotOptimize(hitting_to_tree(h));
    state.counters["clauses"] = static_cast<double>(h.size());
}
BENCHMARK(BM_HittingToTree)->RangeMultiplier(4)->Range(64, 4096);

void BM_SpreadHittingXor(benchmark::State& state) {
    const Xcnf s = spread(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(is_hitting_xor(s));
}
BENCHMARK(BM_SpreadHittingXor)->DenseRange(4, 8, 2);

}  // namespace

BENCHMARK_MAIN();
