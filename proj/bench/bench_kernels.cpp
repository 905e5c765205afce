// OpenMP kernels against their serial references on dense cyclotomic matrices.

#include <benchmark/benchmark.h>

#include <random>

#include "hopfact/matrix.hpp"

using namespace hopfact;

namespace {

ExactMatrix random_matrix(size_t n, long conductor, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> d(-4, 4);
    const long phi = euler_phi(conductor);
    ExactMatrix m(n, n);
    for (auto& z : m.data()) {
        std::vector<mpq_class> c(static_cast<size_t>(phi));
        for (auto& q : c) q = d(rng);
        z = CycNum::from_coeffs(conductor, c);
    }
    return m;
}

template <ExactMatrix (*Kernel)(const ExactMatrix&, const ExactMatrix&)>
void bm_mul(benchmark::State& st) {
    const size_t n = static_cast<size_t>(st.range(0));
    const ExactMatrix a = random_matrix(n, st.range(1), 1), b = random_matrix(n, st.range(1), 2);
    for (auto _ : st) benchmark::DoNotOptimize(Kernel(a, b));
}

template <ExactMatrix (*Kernel)(const ExactMatrix&, const ExactMatrix&)>
void bm_kron(benchmark::State& st) {
    const size_t n = static_cast<size_t>(st.range(0));
    const ExactMatrix a = random_matrix(n, st.range(1), 3), b = random_matrix(n, st.range(1), 4);
    for (auto _ : st) benchmark::DoNotOptimize(Kernel(a, b));
}

// sizes are matrix sides; the second argument is the conductor
void sizes(benchmark::internal::Benchmark* b) {
    for (long n : {4, 9, 16, 27})
        for (long c : {3, 5}) b->Args({n, c});
}

void kron_sizes(benchmark::internal::Benchmark* b) {
    for (long n : {3, 5, 8})
        for (long c : {3, 5}) b->Args({n, c});
}

}  // namespace

BENCHMARK_TEMPLATE(bm_mul, mul_serial)->Apply(sizes)->Unit(benchmark::kMicrosecond);
BENCHMARK_TEMPLATE(bm_mul, mul_parallel)->Apply(sizes)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK_TEMPLATE(bm_kron, kron_serial)->Apply(kron_sizes)->Unit(benchmark::kMicrosecond);
BENCHMARK_TEMPLATE(bm_kron, kron_parallel)->Apply(kron_sizes)->Unit(benchmark::kMicrosecond)->UseRealTime();

BENCHMARK_MAIN();
