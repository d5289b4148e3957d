#include <benchmark/benchmark.h>

#include "majorkit/birkhoff.hpp"
#include "majorkit/matrix_major.hpp"
#include "majorkit/preservers.hpp"
#include "majorkit/vector_major.hpp"

using namespace majorkit;

namespace {

void bm_check_strong_holds(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int m = static_cast<int>(state.range(1));
    Rng rng(1);
    const RMatrix b = random_matrix(n, m, rng);
    const RMatrix a = random_doubly_stochastic(n, 3, rng) * b;
    for (auto _ : state) {
        auto v = check_strong(a, b);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(bm_check_strong_holds)->Args({3, 2})->Args({4, 3})->Args({5, 4});

void bm_check_strong_fails(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Rng rng(2);
    RMatrix a = random_matrix(n, n, rng);
    RMatrix b = random_matrix(n, n, rng);
    for (int j = 0; j < n; ++j) {
        const Rational gap = (a.column(j).sum() - b.column(j).sum()) / n;
        for (int i = 0; i < n; ++i) b.at(i, j) += gap;
    }
    for (auto _ : state) {
        auto v = check_strong(a, b);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(bm_check_strong_fails)->Arg(3)->Arg(4)->Arg(5);

void bm_hlp_witness(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Rng rng(3);
    const RVector b = random_vector(n, rng);
    const RVector a = random_doubly_stochastic(n, 4, rng) * b;
    for (auto _ : state) {
        auto w = hlp_witness(a, b);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(bm_hlp_witness)->Arg(4)->Arg(8)->Arg(12);

void bm_birkhoff(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const RMatrix d = random_doubly_stochastic(n, 6, 4);
    for (auto _ : state) {
        auto dec = birkhoff_decompose(d);
        benchmark::DoNotOptimize(dec);
    }
}
BENCHMARK(bm_birkhoff)->Arg(4)->Arg(6)->Arg(8);

void bm_extract_cs_form(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int m = static_cast<int>(state.range(1));
    Rng rng(5);
    std::vector<RMatrix> s;
    for (int j = 0; j < m; ++j) s.push_back(random_matrix(n, m, rng));
    const OperatorGrid g = make_cs_form(s, random_permutation(n, rng), random_matrix(m, m, rng));
    for (auto _ : state) {
        auto form = extract_cs_preserver_form(g);
        benchmark::DoNotOptimize(form);
    }
}
BENCHMARK(bm_extract_cs_form)->Args({3, 2})->Args({4, 3})->Args({6, 4});

} // namespace

BENCHMARK_MAIN();
