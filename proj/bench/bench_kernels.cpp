// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "logpot/compound.hpp"
#include "logpot/conjecture.hpp"
#include "logpot/hausdorff.hpp"

using namespace logpot;

namespace {

ComplexMatrix random_matrix(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = cplx(g(rng), g(rng));
    return m;
}

PointSet random_points(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> p(n);
    for (auto& z : p) z = cplx(u(rng), u(rng));
    return PointSet::create(std::move(p));
}

std::vector<cplx> hexagon()
{
    std::vector<cplx> v;
    for (int i = 0; i < 6; ++i) v.push_back(std::polar(1.0, std::numbers::pi * i / 3.0));
    return v;
}

template <ComplexMatrix (*F)(const ComplexMatrix&, std::size_t)>
void bm_compound(benchmark::State& state)
{
    const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
    const auto k = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(F(m, k));
}

template <double (*F)(const PointSet&, const PointSet&)>
void bm_hausdorff(benchmark::State& state)
{
    const auto a = random_points(static_cast<std::size_t>(state.range(0)), 2);
    const auto b = random_points(static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(F(a, b));
}

template <McEstimate (*F)(std::span<const cplx>, const InertiaSpec&, std::size_t, std::uint64_t)>
void bm_inertia(benchmark::State& state)
{
    const auto v = hexagon();
    InertiaSpec spec;
    spec.alpha = 3.0;
    for (auto _ : state) benchmark::DoNotOptimize(F(v, spec, static_cast<std::size_t>(state.range(0)), 7));
}

} // namespace

BENCHMARK(bm_compound<compound>)->Name("compound/parallel")->Args({10, 5})->Args({12, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_compound<reference::compound>)->Name("compound/reference")->Args({10, 5})->Args({12, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_hausdorff<directed_hausdorff>)->Name("hausdorff/parallel")->Arg(1000)->Arg(8000)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_hausdorff<reference::directed_hausdorff>)->Name("hausdorff/reference")->Arg(1000)->Arg(8000)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_inertia<inertia_moment_mc>)->Name("inertia_mc/parallel")->Arg(1 << 18)->Arg(1 << 21)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_inertia<reference::inertia_moment_mc>)->Name("inertia_mc/reference")->Arg(1 << 18)->Arg(1 << 21)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
