#include "ellsos/detrep.hpp"
#include "ellsos/model.hpp"
#include "ellsos/monodromy.hpp"
#include "ellsos/theta.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace ellsos;

namespace {

model_params params_fixture(int L) {
    model_params p;
    p.L = L;
    p.gamma = {0.41, 0.13};
    p.tau = {0.23, -0.11};
    const std::vector<scalar> pool{
        {0.05, 0.02}, {-0.13, 0.07}, {0.21, -0.16}, {-0.08, -0.04}};
    p.mu.assign(pool.begin(), pool.begin() + L);
    return p;
}

spectral_config cfg_fixture(int L) {
    spectral_config c;
    const std::vector<scalar> pool{
        {0.31, -0.06}, {-0.27, 0.18}, {0.12, 0.09}, {-0.19, -0.23}};
    c.x.assign(pool.begin(), pool.begin() + L);
    c.x0 = {0.11, 0.21};
    c.x0bar = {-0.19, -0.14};
    return c;
}

void bm_theta1(benchmark::State& state) {
    const theta_context ctx;
    const scalar x{0.3, 0.1};
    for (auto _ : state) benchmark::DoNotOptimize(theta1(x, ctx));
}
BENCHMARK(bm_theta1);

void bm_vertex_weights(benchmark::State& state) {
    const model_params p = params_fixture(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(dynamical_weights({0.27, -0.08}, {0.51, 0.06}, p));
}
BENCHMARK(bm_vertex_weights);

void bm_partition_function(benchmark::State& state) {
    const int L = static_cast<int>(state.range(0));
    const model_params p = params_fixture(L);
    const spectral_config c = cfg_fixture(L);
    for (auto _ : state) benchmark::DoNotOptimize(partition_function(c.x, p.tau, p));
}
BENCHMARK(bm_partition_function)->DenseRange(1, 4);

void bm_monodromy(benchmark::State& state) {
    const int L = static_cast<int>(state.range(0));
    const model_params p = params_fixture(L);
    for (auto _ : state) benchmark::DoNotOptimize(monodromy({0.31, -0.06}, p.tau, p));
}
BENCHMARK(bm_monodromy)->DenseRange(1, 4);

void bm_assemble_omega(benchmark::State& state) {
    const int L = static_cast<int>(state.range(0));
    const model_params p = params_fixture(L);
    const spectral_config c = cfg_fixture(L);
    for (auto _ : state) benchmark::DoNotOptimize(assemble_omega(c, p));
}
BENCHMARK(bm_assemble_omega)->DenseRange(1, 3);

void bm_z_det(benchmark::State& state) {
    const int L = static_cast<int>(state.range(0));
    const model_params p = params_fixture(L);
    const spectral_config c = cfg_fixture(L);
    for (auto _ : state)
        benchmark::DoNotOptimize(z_det(value_label::none(), c, p));
}
BENCHMARK(bm_z_det)->DenseRange(1, 3);

} // namespace

BENCHMARK_MAIN();
