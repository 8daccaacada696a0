#include "hodgeforge/chain.hpp"
#include "hodgeforge/complex.hpp"
#include "hodgeforge/exact.hpp"
#include "hodgeforge/hodge.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace hodgeforge;

namespace {

SimplicialComplex subdivided_sphere(int n, int times) {
    SimplicialComplex k = simplex_sphere(n);
    for (int i = 0; i < times; ++i) k = barycentric_subdivision(k);
    return k;
}

void BM_Subdivision(benchmark::State& state) {
    const SimplicialComplex base = subdivided_sphere(3, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(barycentric_subdivision(base));
    state.counters["facets_in"] = static_cast<double>(base.count(base.dim()));
}
BENCHMARK(BM_Subdivision)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BoundaryAssembly(benchmark::State& state) {
    const auto k = std::make_shared<const SimplicialComplex>(subdivided_sphere(3, static_cast<int>(state.range(0))));
    for (auto _ : state) {
        ChainSystem cs(k);
        benchmark::DoNotOptimize(cs.boundary(k->dim()).nnz());
    }
    state.counters["simplices"] = static_cast<double>(k->count(0) + k->count(1) + k->count(2) + k->count(3));
}
BENCHMARK(BM_BoundaryAssembly)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_ExactBetti(benchmark::State& state) {
    const ChainSystem cs(subdivided_sphere(2, static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(betti_exact(cs));
}
BENCHMARK(BM_ExactBetti)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ImplicitMatvec(benchmark::State& state) {
    const SimplicialComplex k = subdivided_sphere(3, 2);
    const int degree = static_cast<int>(state.range(0));
    std::vector<double> x(k.count(degree));
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::cos(static_cast<double>(i));
    for (auto _ : state) benchmark::DoNotOptimize(implicit_matvec(k, degree, x));
    state.counters["n"] = static_cast<double>(x.size());
}
BENCHMARK(BM_ImplicitMatvec)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_Lanczos(benchmark::State& state) {
    const ChainSystem cs(subdivided_sphere(2, static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(lanczos_extremes(cs, 1, 6));
    state.counters["n"] = static_cast<double>(cs.complex().count(1));
}
BENCHMARK(BM_Lanczos)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_DenseSpectrum(benchmark::State& state) {
    const ChainSystem cs(subdivided_sphere(2, static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(spectrum(cs, 1));
}
BENCHMARK(BM_DenseSpectrum)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
