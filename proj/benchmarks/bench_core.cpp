// Copyright 2026 The quga Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "quga/ansatz.hpp"
#include "quga/evaluation.hpp"
#include "quga/generator.hpp"
#include "quga/mlp.hpp"
#include "quga/trainer.hpp"

namespace {

quga::AnsatzSpec spec_for(std::int64_t params) {
    switch (params) {
    case 36: return {quga::AnsatzFamily::RxFixedY, 5, 6};
    case 66: return {quga::AnsatzFamily::RxFixedY, 10, 6};
    case 72: return {quga::AnsatzFamily::RxRy, 5, 6};
    default: return {quga::AnsatzFamily::RxRy, 10, 6};
    }
}

std::vector<double> random_vector(std::mt19937_64 &rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::vector<double> v(n);
    for (auto &x : v) x = u(rng);
    return v;
}

void BM_CircuitForward(benchmark::State &state) {
    std::mt19937_64 rng(1);
    const auto spec = spec_for(state.range(0));
    const auto theta = random_vector(rng, quga::param_count(spec));
    const auto z = random_vector(rng, 6);
    for (auto _ : state) benchmark::DoNotOptimize(quga::run_generator_circuit(spec, theta, z));
}
BENCHMARK(BM_CircuitForward)->Arg(36)->Arg(66)->Arg(72)->Arg(132);

void BM_AdjointVjp(benchmark::State &state) {
    std::mt19937_64 rng(2);
    const auto spec = spec_for(state.range(0));
    const auto theta = random_vector(rng, quga::param_count(spec));
    const auto z = random_vector(rng, 6);
    const auto u = random_vector(rng, 6);
    for (auto _ : state) benchmark::DoNotOptimize(quga::adjoint_vjp(spec, theta, z, u));
}
BENCHMARK(BM_AdjointVjp)->Arg(36)->Arg(66)->Arg(72)->Arg(132);

void BM_ParamShiftJacobian(benchmark::State &state) {
    std::mt19937_64 rng(3);
    const auto spec = spec_for(state.range(0));
    const auto theta = random_vector(rng, quga::param_count(spec));
    const auto z = random_vector(rng, 6);
    for (auto _ : state) benchmark::DoNotOptimize(quga::param_shift_jacobian(spec, theta, z));
}
BENCHMARK(BM_ParamShiftJacobian)->Arg(36)->Arg(132);

void BM_DiscriminatorForwardBackward(benchmark::State &state) {
    std::mt19937_64 rng(4);
    quga::Mlp d = quga::build_discriminator();
    d.init_uniform(rng);
    const auto x = random_vector(rng, 6);
    const double up = 1.0;
    for (auto _ : state) {
        const auto fwd = d.forward(x);
        benchmark::DoNotOptimize(d.backward(fwd.cache, std::span(&up, 1)));
    }
}
BENCHMARK(BM_DiscriminatorForwardBackward);

void BM_TriangleValid(benchmark::State &state) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<quga::GraphSample> samples(1000);
    for (auto &g : samples) {
        for (auto &w : g.weights) w = u(rng);
    }
    for (auto _ : state) benchmark::DoNotOptimize(quga::valid_count(samples));
    state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_TriangleValid);

void BM_TrainStep(benchmark::State &state) {
    static const char *const kModels[] = {"classical", "qugan36", "qugan132"};
    std::mt19937_64 rng(6);
    const auto cfg = *quga::generator_config_for(kModels[state.range(0)]);
    quga::GanState gan = quga::GanState::create(quga::TrainConfig{}, cfg, rng);
    std::vector<quga::GraphSample> batch(32);
    for (auto &g : batch) g.weights.fill(1.0 / 6);
    for (auto _ : state) benchmark::DoNotOptimize(quga::train_step(gan, batch, rng));
    state.SetLabel(kModels[state.range(0)]);
}
BENCHMARK(BM_TrainStep)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
