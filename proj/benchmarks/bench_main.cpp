#include <benchmark/benchmark.h>

#include <random>

#include "spine/cliques.hpp"
#include "spine/pencils.hpp"
#include "spine/relations.hpp"
#include "spine/spine_space.hpp"

using namespace spine;

namespace {

const SpineSpace& small_bundle() {
    static const SpineSpace s = build_spine(SpineParams::make(2, 6, 2, 1, 3));
    return s;
}

void BM_Rref(benchmark::State& state) {
    const auto f = FieldSpec::make(static_cast<int>(state.range(0)), 8);
    std::mt19937 rng(1);
    std::vector<std::vector<int>> rows(6, std::vector<int>(8));
    for (auto _ : state) {
        for (auto& r : rows)
            for (auto& x : r) x = static_cast<int>(rng() % static_cast<unsigned>(f.q));
        benchmark::DoNotOptimize(rref(f, rows));
    }
}
BENCHMARK(BM_Rref)->Arg(2)->Arg(3)->Arg(5);

void BM_EnumerateSubspaces(benchmark::State& state) {
    const auto f = FieldSpec::make(2, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_subspaces(f, 3));
}
BENCHMARK(BM_EnumerateSubspaces)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_BuildSpine(benchmark::State& state) {
    const auto p = SpineParams::make(2, 6, 2, 1, 3);
    for (auto _ : state) benchmark::DoNotOptimize(build_spine(p));
}
BENCHMARK(BM_BuildSpine)->Unit(benchmark::kMillisecond);

void BM_ComputePi(benchmark::State& state) {
    const auto& s = small_bundle();
    for (auto _ : state) benchmark::DoNotOptimize(compute_pi(s));
}
BENCHMARK(BM_ComputePi)->Unit(benchmark::kMillisecond);

void BM_FamilyK(benchmark::State& state) {
    const auto g = compute_relation(small_bundle(), state.range(0) ? Delta::rho : Delta::pi);
    for (auto _ : state) benchmark::DoNotOptimize(family_K(g));
}
BENCHMARK(BM_FamilyK)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BronKerbosch(benchmark::State& state) {
    const auto g = compute_relation(small_bundle(), state.range(0) ? Delta::rho : Delta::pi);
    for (auto _ : state) benchmark::DoNotOptimize(bron_kerbosch(g));
}
BENCHMARK(BM_BronKerbosch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SpanDimension(benchmark::State& state) {
    // lines of PG(3,2) as blocks on its 15 points
    const auto f = FieldSpec::make(2, 4);
    std::vector<Clique> blocks;
    const auto pts = enumerate_subspaces(f, 1);
    for (const auto& l : enumerate_subspaces(f, 2)) {
        Clique c;
        for (LineId i = 0; i < pts.size(); ++i)
            if (contains(l, pts[i])) c.push_back(i);
        blocks.push_back(c);
    }
    Clique all(pts.size());
    for (LineId i = 0; i < all.size(); ++i) all[i] = i;
    for (auto _ : state) benchmark::DoNotOptimize(span_dimension(all, blocks));
}
BENCHMARK(BM_SpanDimension);

}  // namespace

BENCHMARK_MAIN();
