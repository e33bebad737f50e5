#include <benchmark/benchmark.h>

#include "f4rep/algebra.hpp"
#include "f4rep/identity.hpp"
#include "f4rep/representation.hpp"

using namespace f4rep;

static void BM_BasisBracket(benchmark::State &state)
{
    const AlgebraElement u = f4_root_vector({{0, 1, 1, 0}, 1}) + f4_cartan(2);
    const AlgebraElement v = v_basis(7) - v_basis(20);
    for (auto _ : state)
        benchmark::DoNotOptimize(bracket(u, v));
}
BENCHMARK(BM_BasisBracket);

static void BM_PolynomialProduct(benchmark::State &state)
{
    const Polynomial a = eta1();
    const Polynomial b = zeta(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolynomialProduct);

static void BM_OperatorOnCubic(benchmark::State &state)
{
    const Polynomial f = eta2();
    const Derivation &d = oracle_operator(OperatorLabel::simple(3, -1));
    for (auto _ : state)
        benchmark::DoNotOptimize(d(f));
}
BENCHMARK(BM_OperatorOnCubic);

static void BM_SingularVectors(benchmark::State &state)
{
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(singular_vectors(k).total());
}
BENCHMARK(BM_SingularVectors)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_RhsSeries(benchmark::State &state)
{
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(rhs_series(order));
}
BENCHMARK(BM_RhsSeries)->Arg(30)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
