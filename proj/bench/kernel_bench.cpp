// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include <random>

#include "cslab/harness.hpp"
#include "cslab/kernels.hpp"

using namespace cslab;

namespace {

const SelectionCode& bench_code() {
    static const auto code = greedy_construct(8, desk16_profile());
    return code;
}

const ClosestStringInstance& bench_instance() {
    static const auto g = corpus::cycle(6, 3);
    static const auto inst = reduce(g, desk16_profile());
    return inst;
}

std::vector<BitString> bench_centers(std::size_t count) {
    const auto& inst = bench_instance();
    std::vector<BitString> centers;
    for (std::size_t i = 0; i < count; ++i) {
        centers.push_back(tuple_center({i % 6, (i / 6) % 6, (i / 36) % 6}, inst.coding, inst.layout));
    }
    return centers;
}

template <bool Parallel>
void BM_max_distance_batch(benchmark::State& state) {
    const auto& inst = bench_instance();
    const auto centers = bench_centers(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto hits = Parallel ? kernels::max_distance_batch(inst.constraints, centers)
                             : kernels::serial::max_distance_batch(inst.constraints, centers);
        benchmark::DoNotOptimize(hits);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(inst.size() * centers.size()));
}

template <bool Parallel>
void BM_collect_forbidden(benchmark::State& state) {
    for (auto _ : state) {
        auto ys = Parallel ? kernels::collect_forbidden(bench_code()) : kernels::serial::collect_forbidden(bench_code());
        benchmark::DoNotOptimize(ys);
    }
}

template <bool Parallel>
void BM_far_forbidden_scan(benchmark::State& state) {
    for (auto _ : state) {
        auto scan = Parallel ? kernels::far_forbidden_scan(bench_code())
                             : kernels::serial::far_forbidden_scan(bench_code());
        benchmark::DoNotOptimize(scan);
    }
}

template <bool Parallel>
void BM_brute_force_min_max(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto len = static_cast<std::size_t>(state.range(0));
    std::vector<std::uint64_t> cs(6);
    for (auto& c : cs) c = rng() & ((std::uint64_t{1} << len) - 1);
    for (auto _ : state) {
        auto r = Parallel ? kernels::brute_force_min_max(cs, len) : kernels::serial::brute_force_min_max(cs, len);
        benchmark::DoNotOptimize(r);
    }
}

}  // namespace

BENCHMARK(BM_max_distance_batch<false>)->Name("max_distance_batch/serial")->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_max_distance_batch<true>)->Name("max_distance_batch/omp")->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_collect_forbidden<false>)->Name("collect_forbidden/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_collect_forbidden<true>)->Name("collect_forbidden/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_far_forbidden_scan<false>)->Name("far_forbidden_scan/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_far_forbidden_scan<true>)->Name("far_forbidden_scan/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_brute_force_min_max<false>)->Name("brute_force_min_max/serial")->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_brute_force_min_max<true>)->Name("brute_force_min_max/omp")->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
