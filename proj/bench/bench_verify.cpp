#include <benchmark/benchmark.h>

#include <map>

#include "hadamard/registry.hpp"
#include "hadamard/verify.hpp"

namespace {

const had::SignMatrix& matrix_of(int n) {
    static std::map<int, had::SignMatrix> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, had::hadamard_matrix(n)).first;
    return it->second;
}

void BM_Parallel(benchmark::State& st) {
    had::PackedRows p(matrix_of(static_cast<int>(st.range(0))));
    for (auto _ : st) benchmark::DoNotOptimize(had::violation_parallel(p));
}

void BM_SerialPacked(benchmark::State& st) {
    had::PackedRows p(matrix_of(static_cast<int>(st.range(0))));
    for (auto _ : st) benchmark::DoNotOptimize(had::violation_serial(p));
}

void BM_Reference(benchmark::State& st) {
    const auto& m = matrix_of(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(had::is_hadamard_reference(m));
}

void BM_PackAndCheck(benchmark::State& st) {
    const auto& m = matrix_of(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(had::is_hadamard(m));
}

}  // namespace

BENCHMARK(BM_Parallel)->Arg(292)->Arg(756)->Arg(1196)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SerialPacked)->Arg(292)->Arg(756)->Arg(1196)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Reference)->Arg(292)->Arg(756)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PackAndCheck)->Arg(292)->Arg(756)->Arg(1196)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
