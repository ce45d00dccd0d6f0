#include <benchmark/benchmark.h>

#include <random>

#include "sl4/cone.hpp"
#include "sl4/depolarization.hpp"
#include "sl4/dirac.hpp"
#include "sl4/factorization.hpp"
#include "sl4/lorentz.hpp"

namespace {

sl4::StokesVector probe_state() { return {1.0, 0.3, 0.4, 0.2}; }

void BM_MatMul(benchmark::State& state) {
    const sl4::RealMatrix4 a = sl4::one_param_element(sl4::SubgroupId::U2A, 0.7);
    const sl4::RealMatrix4 b = sl4::one_param_element(sl4::SubgroupId::U1a, 0.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sl4::mat_mul(a, b));
    }
}
BENCHMARK(BM_MatMul);

void BM_OneParamElement(benchmark::State& state) {
    const auto id = static_cast<sl4::SubgroupId>(state.range(0));
    double t = 0.0;
    for (auto _ : state) {
        t += 1e-6;
        benchmark::DoNotOptimize(sl4::one_param_element(id, t));
    }
}
BENCHMARK(BM_OneParamElement)
    ->Arg(static_cast<int>(sl4::SubgroupId::U1a))
    ->Arg(static_cast<int>(sl4::SubgroupId::U2A))
    ->Arg(static_cast<int>(sl4::SubgroupId::U2B));

void BM_CheckOnState(benchmark::State& state) {
    const sl4::RealMatrix4 m = sl4::one_param_element(sl4::SubgroupId::U2A, 0.4);
    const sl4::StokesVector s = probe_state();
    for (auto _ : state) {
        benchmark::DoNotOptimize(sl4::check_on_state(m, s));
    }
}
BENCHMARK(BM_CheckOnState);

void BM_RotationRange(benchmark::State& state) {
    const sl4::PolarizationState ps{1.0, {0.3, 0.4, 0.2}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(sl4::rotation_variant_range(sl4::SubgroupId::U1a, ps));
    }
}
BENCHMARK(BM_RotationRange);

void BM_BruteForceRange(benchmark::State& state) {
    const sl4::StokesVector s = probe_state();
    const int steps = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            sl4::brute_force_range(sl4::SubgroupId::U2A, s, -6.0, 6.0, steps));
    }
    state.SetItemsProcessed(state.iterations() * (steps + 1));
}
BENCHMARK(BM_BruteForceRange)->Arg(1000)->Arg(100000);

void BM_ActPartial(benchmark::State& state) {
    const sl4::BoostSpec b{0.8, {0.0, 0.6, 0.8}};
    const sl4::PolarizationState ps{1.0, {0.3, 0.4, 0.2}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(sl4::act_partial(b, ps));
    }
}
BENCHMARK(BM_ActPartial);

void BM_DEntity(benchmark::State& state) {
    const sl4::PolarizationState ps{1.0, {0.5, 0.0, 0.0}};
    double x = 0.0;
    for (auto _ : state) {
        x = (x < 1.0) ? x + 1e-6 : 0.0;
        benchmark::DoNotOptimize(sl4::d_entity(sl4::SubgroupId::U1a, ps, x));
    }
}
BENCHMARK(BM_DEntity);

void BM_LorentzFromK(benchmark::State& state) {
    sl4::QuatParams q;
    q.k0 = sl4::Complex{0.9, 0.1};
    q.k = {sl4::Complex{0.2, -0.3}, sl4::Complex{0.0, 0.4}, sl4::Complex{-0.1, 0.2}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(sl4::lorentz_from_k(q));
    }
}
BENCHMARK(BM_LorentzFromK);

}  // namespace

BENCHMARK_MAIN();
