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

#include "quga/generator.hpp"

#include <algorithm>
#include <numbers>

#include "quga/errors.hpp"

namespace quga {

const std::vector<std::string> &model_names() {
    static const std::vector<std::string> names{"classical", "qugan36", "qugan66", "qugan72",
                                                "qugan132"};
    return names;
}

std::optional<GeneratorConfig> generator_config_for(std::string_view model) {
    GeneratorConfig c;
    if (model == "classical") {
        c.kind = GeneratorKind::Classical;
        return c;
    }
    c.kind = GeneratorKind::Quantum;
    if (model == "qugan36") {
        c.ansatz = {AnsatzFamily::RxFixedY, 5, 6};
    } else if (model == "qugan66") {
        c.ansatz = {AnsatzFamily::RxFixedY, 10, 6};
    } else if (model == "qugan72") {
        c.ansatz = {AnsatzFamily::RxRy, 5, 6};
    } else if (model == "qugan132") {
        c.ansatz = {AnsatzFamily::RxRy, 10, 6};
    } else {
        return std::nullopt;
    }
    return c;
}

std::size_t expected_param_count(std::string_view model) {
    if (model == "classical") return 136;
    if (model == "qugan36") return 36;
    if (model == "qugan66") return 66;
    if (model == "qugan72") return 72;
    if (model == "qugan132") return 132;
    throw ArgumentError("unknown model '" + std::string(model) + "'");
}

std::vector<double> renormalize_vjp(std::span<const double> raw,
                                    std::span<const double> upstream) {
    if (raw.size() != upstream.size()) {
        throw ArgumentError("renormalization VJP: raw and upstream lengths differ");
    }
    double total = 0.0;
    double dot = 0.0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        total += raw[i];
        dot += upstream[i] * raw[i];
    }
    std::vector<double> g(raw.size());
    for (std::size_t j = 0; j < raw.size(); ++j) {
        g[j] = upstream[j] / total - dot / (total * total);
    }
    return g;
}

Generator::Generator(const GeneratorConfig &config) : config_(config) {
    if (config_.kind == GeneratorKind::Classical) {
        mlp_ = build_classical_generator(config_.leaky_slope);
    } else {
        if (config_.ansatz.n_qubits != kLatentDim) {
            throw ConfigError("quantum generators embed a 6-dim latent; need 6 qubits");
        }
        angles_.assign(quga::param_count(config_.ansatz), 0.0);
    }
}

Generator Generator::create(const GeneratorConfig &config, std::mt19937_64 &rng) {
    Generator g(config);
    if (g.mlp_) {
        g.mlp_->init_uniform(rng);
        const std::size_t last = g.mlp_->n_layers() - 1;
        for (std::size_t r = 0; r < g.mlp_->output_dim(); ++r) {
            g.mlp_->bias(last, r) = config.output_bias_init;
        }
    } else {
        std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
        for (double &a : g.angles_) a = angle(rng);
    }
    return g;
}

std::size_t Generator::param_count() const noexcept {
    return mlp_ ? mlp_->param_count() : angles_.size();
}

std::span<double> Generator::params() noexcept {
    if (mlp_) return mlp_->params();
    return angles_;
}

std::span<const double> Generator::params() const noexcept {
    if (mlp_) return mlp_->params();
    return angles_;
}

const Mlp &Generator::mlp() const {
    if (!mlp_) throw ArgumentError("quantum generator has no MLP");
    return *mlp_;
}

std::vector<double> Generator::raw_output(std::span<const double> z) const {
    if (z.size() != kLatentDim) {
        throw ArgumentError("latent vector must have 6 entries, got " + std::to_string(z.size()));
    }
    if (mlp_) return mlp_->predict(z);
    return run_generator_circuit(config_.ansatz, angles_, z, config_.embedding);
}

namespace {

Generated normalize_or_fallback(const std::vector<double> &raw) {
    double total = 0.0;
    for (double r : raw) total += r;
    Generated out;
    if (total <= kDegenerateSum) {
        out.sample.weights.fill(1.0 / static_cast<double>(kEdges));
        out.degenerate = true;
        return out;
    }
    for (std::size_t i = 0; i < kEdges; ++i) out.sample.weights[i] = raw[i] / total;
    return out;
}

}  // namespace

Generated Generator::generate(std::span<const double> z) const {
    return normalize_or_fallback(raw_output(z));
}

std::vector<double> Generator::gradient(std::span<const double> z,
                                        std::span<const double> upstream) const {
    if (upstream.size() != kEdges) {
        throw ArgumentError("generator upstream gradient must have 6 entries");
    }
    if (z.size() != kLatentDim) {
        throw ArgumentError("latent vector must have 6 entries, got " + std::to_string(z.size()));
    }
    if (mlp_) {
        const auto fwd = mlp_->forward(z);
        double total = 0.0;
        for (double r : fwd.output) total += r;
        if (total <= kDegenerateSum) return std::vector<double>(param_count(), 0.0);
        const auto raw_grad = renormalize_vjp(fwd.output, upstream);
        return mlp_->backward(fwd.cache, raw_grad).params;
    }

    const auto raw = run_generator_circuit(config_.ansatz, angles_, z, config_.embedding);
    double total = 0.0;
    for (double r : raw) total += r;
    if (total <= kDegenerateSum) return std::vector<double>(param_count(), 0.0);
    const auto raw_grad = renormalize_vjp(raw, upstream);
    if (config_.gradient == QuantumGradient::Adjoint) {
        return adjoint_vjp(config_.ansatz, angles_, z, raw_grad, config_.embedding);
    }
    const auto jac = param_shift_jacobian(config_.ansatz, angles_, z, config_.embedding);
    std::vector<double> g(jac.cols, 0.0);
    for (std::size_t i = 0; i < jac.rows; ++i) {
        for (std::size_t j = 0; j < jac.cols; ++j) g[j] += raw_grad[i] * jac(i, j);
    }
    return g;
}

}  // namespace quga
