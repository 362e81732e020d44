// Convolution kernels and the level recursion, fast path against reference.

#include <benchmark/benchmark.h>


#include "x0curve/curvepoly.hpp"
#include "x0curve/kernels.hpp"

namespace {

using x0::kernels::Coeffs;

Coeffs make_input(std::size_t n, int bits, unsigned long seed)
{
    gmp_randclass gr(gmp_randinit_default);
    gr.seed(seed);
    Coeffs v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = gr.get_z_bits(bits);
        if (i % 3 == 1)
            v[i] = -v[i];
    }
    return v;
}

template <Coeffs (*Kernel)(std::span<const mpz_class>, std::span<const mpz_class>, std::size_t)>
void convolution(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const int bits = static_cast<int>(state.range(1));
    const Coeffs a = make_input(n, bits, 1);
    const Coeffs b = make_input(n, bits, 2);
    const std::size_t out = x0::kernels::full_length(n, n);
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(a, b, out));
}

void sizes(benchmark::internal::Benchmark* b)
{
    for (int bits : {64, 1024})
        for (int n : {16, 64, 256, 1024})
            b->Args({n, bits});
}

BENCHMARK_TEMPLATE(convolution, x0::kernels::convolve_serial)->Apply(sizes);
BENCHMARK_TEMPLATE(convolution, x0::kernels::convolve_parallel)->Apply(sizes);
BENCHMARK_TEMPLATE(convolution, x0::kernels::convolve_kronecker)->Apply(sizes);

void recursion_fast(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const x0::BiPoly prev = x0::p_poly(n - 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(x0::recursion_step(prev, n));
}

void recursion_reference(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const x0::BiPoly prev = x0::p_poly(n - 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(x0::recursion_step_reference(prev, n));
}

BENCHMARK(recursion_fast)->DenseRange(8, 11)->Unit(benchmark::kMillisecond);
BENCHMARK(recursion_reference)->DenseRange(8, 11)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
