#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "gre/coefficients.hpp"
#include "gre/correlation.hpp"
#include "gre/eratosthenes.hpp"
#include "gre/expansion.hpp"
#include "gre/factor_table.hpp"
#include "gre/ramanujan_sum.hpp"

namespace {

using gre::cdouble;
using gre::FactorTable;

const FactorTable& shared_table() {
    static const FactorTable table(1'000'000);
    return table;
}

void bm_factor_table_build(benchmark::State& state) {
    const auto limit = static_cast<int64_t>(state.range(0));
    for (auto _ : state) {
        FactorTable table(limit);
        benchmark::DoNotOptimize(table.primes().size());
    }
    state.SetItemsProcessed(state.iterations() * limit);
}
BENCHMARK(bm_factor_table_build)->Arg(100'000)->Arg(1'000'000);

void bm_cq_direct(benchmark::State& state) {
    const int64_t q = state.range(0);
    int64_t a = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gre::cq_direct(q, a));
        a = a % q + 1;
    }
}
BENCHMARK(bm_cq_direct)->Arg(360)->Arg(4096);

void bm_cq_holder(benchmark::State& state) {
    const auto& table = shared_table();
    const int64_t q = state.range(0);
    int64_t a = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gre::cq_holder(q, a, table));
        a = a % q + 1;
    }
}
BENCHMARK(bm_cq_holder)->Arg(360)->Arg(4096)->Arg(999'983);

void bm_cq_kluyver(benchmark::State& state) {
    const auto& table = shared_table();
    const int64_t q = state.range(0);
    int64_t a = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gre::cq_kluyver(q, a, table));
        a = a % q + 1;
    }
}
BENCHMARK(bm_cq_kluyver)->Arg(360)->Arg(4096)->Arg(999'983);

void bm_cq_table_build(benchmark::State& state) {
    const auto& table = shared_table();
    const int64_t n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gre::build_cq_table(n, n, table));
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(bm_cq_table_build)->Arg(64)->Arg(256);

void bm_eratosthenes_transform(benchmark::State& state) {
    const auto& table = shared_table();
    const int64_t d_max = state.range(0);
    gre::ArithmeticFunctionView F;
    F.evaluate = [](int64_t a) { return cdouble{static_cast<double>(a % 7), 0.0}; };
    for (auto _ : state) {
        benchmark::DoNotOptimize(gre::eratosthenes_transform(F, d_max, table));
    }
    state.SetItemsProcessed(state.iterations() * d_max);
}
BENCHMARK(bm_eratosthenes_transform)->Arg(10'000)->Arg(100'000);

void bm_expansion_evaluator_build(benchmark::State& state) {
    const auto& table = shared_table();
    const int64_t x_max = state.range(0);
    const auto G = gre::RamanujanCoefficients::power_log_decay(1.5);
    for (auto _ : state) {
        gre::ExpansionEvaluator evaluator(G, x_max, table);
        benchmark::DoNotOptimize(evaluator.x_max());
    }
}
BENCHMARK(bm_expansion_evaluator_build)->Arg(100'000);

void bm_expansion_evaluate(benchmark::State& state) {
    const auto& table = shared_table();
    const int64_t x_max = state.range(0);
    const auto G = gre::RamanujanCoefficients::power_log_decay(1.5);
    const gre::ExpansionEvaluator evaluator(G, x_max, table);
    const std::vector<int64_t> checkpoints = {x_max};
    int64_t a = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluator.at(a, checkpoints));
        a = a % 210 + 1;
    }
}
BENCHMARK(bm_expansion_evaluate)->Arg(10'000)->Arg(100'000);

void bm_lucht_expansion(benchmark::State& state) {
    const auto& table = shared_table();
    const auto G = gre::RamanujanCoefficients::power_log_decay(1.5);
    const int64_t k_max = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gre::lucht_expansion(G, 10, k_max, table));
    }
}
BENCHMARK(bm_lucht_expansion)->Arg(4096)->Arg(20'000);

void bm_counterexample_correlation(benchmark::State& state) {
    const auto& table = shared_table();
    const auto ce = gre::build_counterexample_one(13, table);
    const auto spec = gre::counterexample_spec(ce, table);
    int64_t a = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gre::correlation(spec, a));
        a = a % 52 + 1;
    }
}
BENCHMARK(bm_counterexample_correlation);

} // namespace

BENCHMARK_MAIN();
