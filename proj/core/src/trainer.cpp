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

#include "quga/trainer.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

#include "quga/errors.hpp"
#include "quga/evaluation.hpp"
#include "quga/io.hpp"
#include "quga/loss.hpp"

namespace quga {

void TrainConfig::validate() const {
    if (batch_size < 1) throw ConfigError("train.batch_size must be >= 1");
    if (eval_samples < 1) throw ConfigError("eval.eval_samples must be >= 1");
    if (eval_every < 1) throw ConfigError("eval.eval_every must be >= 1");
    if (seeds.empty()) throw ConfigError("train.seeds must list at least one seed");
    if (!(lr_disc > 0.0) || !(lr_gen > 0.0)) {
        throw ConfigError("learning rates must be positive");
    }
    if (!(beta1 >= 0.0 && beta1 < 1.0) || !(beta2 >= 0.0 && beta2 < 1.0) || !(epsilon > 0.0)) {
        throw ConfigError("Adam betas must lie in [0, 1) and epsilon must be positive");
    }
}

GanState GanState::create(const TrainConfig &config, const GeneratorConfig &gen_config,
                          std::mt19937_64 &rng) {
    Mlp disc = build_discriminator(config.leaky_slope);
    disc.init_uniform(rng);
    GeneratorConfig gc = gen_config;
    gc.leaky_slope = config.leaky_slope;
    Generator gen = Generator::create(gc, rng);
    const std::size_t disc_n = disc.param_count();
    const std::size_t gen_n = gen.param_count();
    return GanState{std::move(disc), std::move(gen),
                    Adam(disc_n, {config.lr_disc, config.beta1, config.beta2, config.epsilon}),
                    Adam(gen_n, {config.lr_gen, config.beta1, config.beta2, config.epsilon})};
}

std::vector<std::vector<double>> sample_latent(std::mt19937_64 &rng, std::size_t batch) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<std::vector<double>> z(batch, std::vector<double>(kLatentDim));
    for (auto &row : z) {
        for (double &v : row) v = normal(rng);
    }
    return z;
}

StepLosses train_step(GanState &state, std::span<const GraphSample> real_batch,
                      std::mt19937_64 &rng) {
    if (real_batch.empty()) throw ArgumentError("train_step needs a non-empty real batch");
    const std::size_t batch = real_batch.size();
    StepLosses losses;

    // Discriminator: real -> 1, generated -> 0, mean over 2B samples.
    {
        const auto z = sample_latent(rng, batch);
        const double scale = 1.0 / static_cast<double>(2 * batch);
        std::vector<double> grad(state.discriminator.param_count(), 0.0);
        auto accumulate = [&](const EdgeWeights &x, double label) {
            const auto fwd = state.discriminator.forward(x);
            const double d = fwd.output[0];
            losses.disc_loss += bce_loss(d, label) * scale;
            const double upstream = bce_grad(d, label) * scale;
            const auto tape = state.discriminator.backward(fwd.cache, std::span(&upstream, 1));
            for (std::size_t i = 0; i < grad.size(); ++i) grad[i] += tape.params[i];
        };
        for (const auto &g : real_batch) accumulate(g.weights, 1.0);
        for (const auto &zi : z) {
            const auto fake = state.generator.generate(zi);
            if (fake.degenerate) ++state.degenerate_outputs;
            accumulate(fake.sample.weights, 0.0);
        }
        state.disc_opt.step(state.discriminator.params(), grad);
    }

    // Generator: non-saturating objective BCE(D(G(z)), 1).
    {
        const auto z = sample_latent(rng, batch);
        const double scale = 1.0 / static_cast<double>(batch);
        std::vector<double> grad(state.generator.param_count(), 0.0);
        for (const auto &zi : z) {
            const auto fake = state.generator.generate(zi);
            if (fake.degenerate) ++state.degenerate_outputs;
            const auto fwd = state.discriminator.forward(fake.sample.weights);
            const double d = fwd.output[0];
            losses.gen_loss += bce_loss(d, 1.0) * scale;
            const double upstream = bce_grad(d, 1.0) * scale;
            const auto tape = state.discriminator.backward(fwd.cache, std::span(&upstream, 1));
            const auto g = state.generator.gradient(zi, tape.input);
            for (std::size_t i = 0; i < grad.size(); ++i) grad[i] += g[i];
        }
        state.gen_opt.step(state.generator.params(), grad);
    }
    return losses;
}

Evaluation evaluate_generator(const Generator &generator, std::size_t n, std::mt19937_64 &rng) {
    Evaluation ev;
    ev.samples.reserve(n);
    const auto z = sample_latent(rng, n);
    for (const auto &zi : z) ev.samples.push_back(generator.generate(zi).sample);
    ev.valid_count = valid_count(ev.samples);
    ev.weight_std = pooled_weight_std(ev.samples);
    return ev;
}

namespace {

std::mt19937_64 eval_stream(std::uint64_t seed, std::size_t epoch) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(epoch), 0xE7A1U};
    return std::mt19937_64(seq);
}

// Losses at epoch 0, before any update: the whole dataset as the real side.
StepLosses initial_losses(const GanState &state, std::span<const GraphSample> dataset,
                          std::span<const GraphSample> fakes) {
    double real = 0.0;
    for (const auto &g : dataset) real += bce_loss(state.discriminator.predict(g.weights)[0], 1.0);
    double fake_as_fake = 0.0;
    double fake_as_real = 0.0;
    for (const auto &g : fakes) {
        const double d = state.discriminator.predict(g.weights)[0];
        fake_as_fake += bce_loss(d, 0.0);
        fake_as_real += bce_loss(d, 1.0);
    }
    const auto nr = static_cast<double>(dataset.size());
    const auto nf = static_cast<double>(fakes.size());
    return {0.5 * (real / nr + fake_as_fake / nf), fake_as_real / nf};
}

}  // namespace

SeedRun train_seed(const TrainConfig &config, const GeneratorConfig &gen_config,
                   std::span<const GraphSample> dataset, std::uint64_t seed) {
    config.validate();
    if (dataset.empty()) throw ArgumentError("training dataset is empty");

    std::mt19937_64 rng(seed);
    SeedRun run{seed, {}, {}, GanState::create(config, gen_config, rng)};

    auto record = [&](std::size_t epoch, const StepLosses &losses) {
        auto erng = eval_stream(seed, epoch);
        auto ev = evaluate_generator(run.state.generator, config.eval_samples, erng);
        run.records.push_back(
            {seed, epoch, ev.valid_count, ev.weight_std, losses.gen_loss, losses.disc_loss});
        run.final_samples = std::move(ev.samples);
    };

    {
        auto erng = eval_stream(seed, 0);
        auto ev = evaluate_generator(run.state.generator, config.eval_samples, erng);
        const auto losses = initial_losses(run.state, dataset, ev.samples);
        run.records.push_back(
            {seed, 0, ev.valid_count, ev.weight_std, losses.gen_loss, losses.disc_loss});
        run.final_samples = std::move(ev.samples);
    }

    std::vector<std::size_t> order(dataset.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<GraphSample> batch;
    batch.reserve(config.batch_size);

    for (std::size_t epoch = 1; epoch <= config.epochs; ++epoch) {
        std::shuffle(order.begin(), order.end(), rng);
        StepLosses sum;
        std::size_t steps = 0;
        for (std::size_t start = 0; start < order.size(); start += config.batch_size) {
            const std::size_t stop = std::min(start + config.batch_size, order.size());
            batch.clear();
            for (std::size_t i = start; i < stop; ++i) batch.push_back(dataset[order[i]]);
            const auto l = train_step(run.state, batch, rng);
            sum.disc_loss += l.disc_loss;
            sum.gen_loss += l.gen_loss;
            ++steps;
        }
        if (epoch % config.eval_every == 0 || epoch == config.epochs) {
            const auto n = static_cast<double>(steps);
            record(epoch, {sum.disc_loss / n, sum.gen_loss / n});
        }
    }
    return run;
}

std::vector<MeanRecord> average_records(const std::vector<std::vector<MetricsRecord>> &per_seed) {
    if (per_seed.empty()) return {};
    const std::size_t rows = per_seed.front().size();
    for (const auto &r : per_seed) {
        if (r.size() != rows) throw ArgumentError("seed runs have different evaluation rows");
    }
    std::vector<MeanRecord> mean(rows);
    const auto n = static_cast<double>(per_seed.size());
    for (std::size_t i = 0; i < rows; ++i) {
        mean[i].epoch = per_seed.front()[i].epoch;
        for (const auto &r : per_seed) {
            if (r[i].epoch != mean[i].epoch) {
                throw ArgumentError("seed runs evaluated at different epochs");
            }
            mean[i].valid_count += static_cast<double>(r[i].valid_count);
            mean[i].weight_std += r[i].weight_std;
            mean[i].gen_loss += r[i].gen_loss;
            mean[i].disc_loss += r[i].disc_loss;
        }
        mean[i].valid_count /= n;
        mean[i].weight_std /= n;
        mean[i].gen_loss /= n;
        mean[i].disc_loss /= n;
    }
    return mean;
}

TrainResult train(const TrainConfig &config, const GeneratorConfig &gen_config,
                  std::span<const GraphSample> dataset, std::size_t threads) {
    config.validate();
    const std::size_t n = config.seeds.size();
    std::vector<std::optional<SeedRun>> slots(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                slots[i] = train_seed(config, gen_config, dataset, config.seeds[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, n);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
    }
    for (const auto &e : errors) {
        if (e) std::rethrow_exception(e);
    }

    TrainResult result;
    std::vector<std::vector<MetricsRecord>> per_seed;
    for (auto &slot : slots) {
        per_seed.push_back(slot->records);
        result.runs.push_back(std::move(*slot));
    }
    result.mean = average_records(per_seed);
    return result;
}

namespace {
constexpr const char *kMetricsHeader = "seed,epoch,valid_count,weight_std,gen_loss,disc_loss";

void write_comment(std::ostringstream &out, const std::string &comment) {
    if (!comment.empty()) out << "# " << comment << '\n';
}
}  // namespace

std::string metrics_csv(std::span<const MetricsRecord> records, const std::string &comment) {
    std::ostringstream out;
    write_comment(out, comment);
    out << kMetricsHeader << '\n';
    for (const auto &r : records) {
        out << r.seed << ',' << r.epoch << ',' << r.valid_count << ','
            << io::format_double(r.weight_std) << ',' << io::format_double(r.gen_loss) << ','
            << io::format_double(r.disc_loss) << '\n';
    }
    return out.str();
}

std::string mean_metrics_csv(std::span<const MeanRecord> records, const std::string &comment) {
    std::ostringstream out;
    write_comment(out, comment);
    out << kMetricsHeader << '\n';
    for (const auto &r : records) {
        out << "mean," << r.epoch << ',' << io::format_double(r.valid_count) << ','
            << io::format_double(r.weight_std) << ',' << io::format_double(r.gen_loss) << ','
            << io::format_double(r.disc_loss) << '\n';
    }
    return out.str();
}

}  // namespace quga
