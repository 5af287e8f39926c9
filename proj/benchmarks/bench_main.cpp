#include <benchmark/benchmark.h>

#include "semidual/catalog.hpp"
#include "semidual/envelope.hpp"
#include "semidual/partial.hpp"

using namespace semidual;

static void BM_PosetsOfSize(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(posets_of_size(static_cast<std::size_t>(state.range(0))).size());
}
BENCHMARK(BM_PosetsOfSize)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_DistributiveCatalog(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(distributive_lattice_catalog(static_cast<std::size_t>(state.range(0))).size());
}
BENCHMARK(BM_DistributiveCatalog)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_MeetTopHoms(benchmark::State& state) {
    const auto ls = distributive_lattice_catalog(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) {
        std::size_t n = 0;
        for (const auto& l : ls)
            for (const auto& k : ls) n += enumerate_homs(l, k, HomKind::MeetTop).size();
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_MeetTopHoms)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_GPRelations(benchmark::State& state) {
    const auto ls = distributive_lattice_catalog(static_cast<std::size_t>(state.range(0)), 2);
    std::vector<GPSpace> spaces;
    for (const auto& l : ls) spaces.push_back(dual_space(l));
    for (auto _ : state) {
        std::size_t n = 0;
        for (const auto& x : spaces)
            for (const auto& y : spaces) n += enumerate_gp_relations(x, y).size();
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_GPRelations)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_PhiPsi(benchmark::State& state) {
    const auto ls = distributive_lattice_catalog(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state)
        for (const auto& l : ls) {
            auto phi = phi_iso(l);
            benchmark::DoNotOptimize(psi_iso(phi.space).table.size());
        }
}
BENCHMARK(BM_PhiPsi)->Arg(6)->Arg(7);

static void BM_CategoryLaws(benchmark::State& state) {
    std::vector<GPSpace> spaces;
    for (const auto& p : poset_catalog(static_cast<std::size_t>(state.range(0)))) spaces.emplace_back(p);
    for (auto _ : state) benchmark::DoNotOptimize(check_category_laws(spaces).triples);
}
BENCHMARK(BM_CategoryLaws)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_PartialEsakia(benchmark::State& state) {
    std::vector<GPSpace> spaces;
    for (const auto& p : poset_catalog(static_cast<std::size_t>(state.range(0)))) spaces.emplace_back(p);
    for (auto _ : state) {
        std::size_t n = 0;
        for (const auto& x : spaces)
            for (const auto& y : spaces) n += enumerate_partial(x, y, PartialKind::Esakia).size();
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_PartialEsakia)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Envelope(benchmark::State& state) {
    const auto ls = semilattice_catalog(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        for (const auto& l : ls) benchmark::DoNotOptimize(sigma_lattice(l).carrier.size());
}
BENCHMARK(BM_Envelope)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
