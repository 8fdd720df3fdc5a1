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

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "quga/adam.hpp"
#include "quga/generator.hpp"
#include "quga/graph.hpp"
#include "quga/mlp.hpp"

namespace quga {

struct TrainConfig {
    std::size_t epochs = 1000;
    std::size_t batch_size = 32;
    double lr_disc = 0.3;
    double lr_gen = 0.001;
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
    std::size_t eval_samples = 1000;
    std::size_t eval_every = 1;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    double leaky_slope = kDefaultLeakySlope;

    /// Throws ConfigError on zero counts, non-positive learning rates or an
    /// empty seed list.
    void validate() const;
};

/// One evaluation row. valid_count is out of eval_samples generated graphs.
struct MetricsRecord {
    std::uint64_t seed = 0;
    std::size_t epoch = 0;
    std::size_t valid_count = 0;
    double weight_std = 0.0;
    double gen_loss = 0.0;
    double disc_loss = 0.0;
};

/// Seed-averaged evaluation row.
struct MeanRecord {
    std::size_t epoch = 0;
    double valid_count = 0.0;
    double weight_std = 0.0;
    double gen_loss = 0.0;
    double disc_loss = 0.0;
};

struct StepLosses {
    double disc_loss = 0.0;
    double gen_loss = 0.0;
};

/// Discriminator, generator and their optimizers for one seed.
struct GanState {
    Mlp discriminator;
    Generator generator;
    Adam disc_opt;
    Adam gen_opt;
    std::size_t degenerate_outputs = 0;

    /// Seeds the discriminator first, then the generator, from `rng`.
    static GanState create(const TrainConfig &config, const GeneratorConfig &gen_config,
                           std::mt19937_64 &rng);
};

/// batch x 6 matrix of i.i.d. standard normal draws.
[[nodiscard]] std::vector<std::vector<double>> sample_latent(std::mt19937_64 &rng,
                                                             std::size_t batch);

/**
 * One alternating update. The discriminator takes an Adam step on the mean
 * BCE over the real batch (label 1) and an equal-size generated batch
 * (label 0); then the generator takes an Adam step on the mean BCE of
 * D(G(z)) against label 1 for a fresh latent batch.
 */
StepLosses train_step(GanState &state, std::span<const GraphSample> real_batch,
                      std::mt19937_64 &rng);

struct Evaluation {
    std::vector<GraphSample> samples;
    std::size_t valid_count = 0;
    double weight_std = 0.0;
};

/// Draws `n` graphs from the generator without touching the training stream.
[[nodiscard]] Evaluation evaluate_generator(const Generator &generator, std::size_t n,
                                            std::mt19937_64 &rng);

struct SeedRun {
    std::uint64_t seed = 0;
    std::vector<MetricsRecord> records;
    std::vector<GraphSample> final_samples;  ///< samples of the last evaluation
    GanState state;
};

struct TrainResult {
    std::vector<SeedRun> runs;  ///< in config.seeds order
    std::vector<MeanRecord> mean;
};

/**
 * Trains one seed. Evaluations happen at epoch 0 (before any update), every
 * eval_every epochs, and at the final epoch. Each evaluation uses its own
 * stream derived from (seed, epoch), so the cadence does not perturb training.
 */
[[nodiscard]] SeedRun train_seed(const TrainConfig &config, const GeneratorConfig &gen_config,
                                 std::span<const GraphSample> dataset, std::uint64_t seed);

/// Runs every seed, at most `threads` at a time, and averages across seeds.
[[nodiscard]] TrainResult train(const TrainConfig &config, const GeneratorConfig &gen_config,
                                std::span<const GraphSample> dataset, std::size_t threads = 1);

/// Arithmetic mean across runs, epoch by epoch. All runs must share epochs.
[[nodiscard]] std::vector<MeanRecord> average_records(
    const std::vector<std::vector<MetricsRecord>> &per_seed);

/// CSV with header seed,epoch,valid_count,weight_std,gen_loss,disc_loss.
[[nodiscard]] std::string metrics_csv(std::span<const MetricsRecord> records,
                                      const std::string &comment = {});
/// Same schema; the seed column holds "mean".
[[nodiscard]] std::string mean_metrics_csv(std::span<const MeanRecord> records,
                                           const std::string &comment = {});

}  // namespace quga
