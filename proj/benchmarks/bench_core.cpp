#include <benchmark/benchmark.h>

#include "jacksf/finite_n.hpp"
#include "jacksf/kernel.hpp"
#include "jacksf/operators.hpp"

using namespace jacksf;

namespace {

// Fresh Gram–Schmidt per iteration, bypassing the cache.
static void JackComponent(benchmark::State& state) {
    int weight = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto component = detail::build_jack_component<AlphaRat>(weight);
        benchmark::DoNotOptimize(component);
    }
}
BENCHMARK(JackComponent)->DenseRange(4, 8, 1)->Unit(benchmark::kMillisecond);

static void ApplyA2OnJack(benchmark::State& state) {
    int weight = static_cast<int>(state.range(0));
    const SymFun& f = jack_P<AlphaRat>(Partition{weight}).p_form;
    for (auto _ : state) {
        SymFun image = apply_A(2, f);
        benchmark::DoNotOptimize(image);
    }
}
BENCHMARK(ApplyA2OnJack)->DenseRange(4, 8, 1)->Unit(benchmark::kMillisecond);

static void BasisConversion(benchmark::State& state) {
    int weight = static_cast<int>(state.range(0));
    SymFun f(Basis::m);
    for (const Partition& la : enumerate_partitions(weight))
        f.add_term(la, AlphaRat::one());
    benchmark::DoNotOptimize(to_p_basis(f)); // warm the transition-table cache
    for (auto _ : state) {
        SymFun p = to_p_basis(f);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BasisConversion)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void SekiguchiApply(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    MultiPoly<AlphaRat> f = restrict_to_n(SymFun::unit(Partition{2, 1}, Basis::m), n);
    for (auto _ : state) {
        auto image = apply_S_N(f);
        benchmark::DoNotOptimize(image);
    }
}
BENCHMARK(SekiguchiApply)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

static void DetIdInstance(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    PsiInstance inst = random_psi_instance(n, n, 42);
    for (auto _ : state) {
        bool ok = detid_check(inst);
        benchmark::DoNotOptimize(ok);
    }
}
BENCHMARK(DetIdInstance)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

static void KernelLemma(benchmark::State& state) {
    int degree = static_cast<int>(state.range(0));
    SymFun f = SymFun::unit(Partition{2, 1}, Basis::p);
    for (auto _ : state) {
        bool ok = kernel_lemma_check(f, degree);
        benchmark::DoNotOptimize(ok);
    }
}
BENCHMARK(KernelLemma)->DenseRange(4, 6, 1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
