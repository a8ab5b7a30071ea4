// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "mtasep/mlq.hpp"
#include "mtasep/modular.hpp"
#include "mtasep/rng.hpp"
#include "mtasep/tasep.hpp"

using namespace mtasep;

namespace {

void QueuesSerial(benchmark::State& state) {
    const Sector s = Sector::distinct(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(mlq::stationaryFromQueuesSerial(s));
    state.counters["queues"] = s.queueCount().get_d();
}

void QueuesParallel(benchmark::State& state) {
    const Sector s = Sector::distinct(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(mlq::stationaryFromQueues(s, {mlq::kDefaultQueueBudget, 0}));
    state.counters["queues"] = s.queueCount().get_d();
}

modular::DenseMatrix randomMatrix(std::size_t n, std::vector<std::uint64_t>& b, const modular::Modulus& mod) {
    Rng rng(n);
    modular::DenseMatrix a(n);
    b.assign(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        b[r] = rng.below(mod.value());
        for (std::size_t c = 0; c < n; ++c) a.at(r, c) = rng.below(mod.value());
    }
    return a;
}

void EliminationSerial(benchmark::State& state) {
    const modular::Modulus mod(modular::primeAt(0));
    std::vector<std::uint64_t> b;
    const auto a = randomMatrix(static_cast<std::size_t>(state.range(0)), b, mod);
    for (auto _ : state) benchmark::DoNotOptimize(modular::solveSerial(a, b, mod));
}

void EliminationParallel(benchmark::State& state) {
    const modular::Modulus mod(modular::primeAt(0));
    std::vector<std::uint64_t> b;
    const auto a = randomMatrix(static_cast<std::size_t>(state.range(0)), b, mod);
    for (auto _ : state) benchmark::DoNotOptimize(modular::solve(a, b, mod, 0));
}

void TrajectoriesSerial(benchmark::State& state) {
    tasep::SimulationOptions o;
    o.horizon = 2e4;
    const std::vector<SimPattern> p{OrderQuery{1, 2}};
    for (auto _ : state) {
        for (std::uint64_t k = 0; k < 8; ++k) {
            auto one = o;
            one.seed = Rng::split(o.seed, k);
            benchmark::DoNotOptimize(tasep::simulate(Sector::distinct(10), one, p));
        }
    }
}

void TrajectoriesParallel(benchmark::State& state) {
    tasep::SimulationOptions o;
    o.horizon = 2e4;
    const std::vector<SimPattern> p{OrderQuery{1, 2}};
    for (auto _ : state) benchmark::DoNotOptimize(tasep::simulateMany(Sector::distinct(10), o, p, 8));
}

}  // namespace

BENCHMARK(QueuesSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(QueuesParallel)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(EliminationSerial)->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);
BENCHMARK(EliminationParallel)->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);
BENCHMARK(TrajectoriesSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(TrajectoriesParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
