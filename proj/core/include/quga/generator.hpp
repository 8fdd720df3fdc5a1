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
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quga/ansatz.hpp"
#include "quga/graph.hpp"
#include "quga/mlp.hpp"

namespace quga {

enum class GeneratorKind : std::uint8_t { Classical, Quantum };

enum class QuantumGradient : std::uint8_t { Adjoint, ParameterShift };

inline constexpr std::size_t kLatentDim = 6;

/// Output bias of the ReLU-output classical generator at initialization.
inline constexpr double kClassicalOutputBiasInit = 2.0;

struct GeneratorConfig {
    GeneratorKind kind = GeneratorKind::Quantum;
    AnsatzSpec ansatz{};  ///< used when kind == Quantum
    EmbeddingAxis embedding = EmbeddingAxis::RY;
    QuantumGradient gradient = QuantumGradient::Adjoint;
    double leaky_slope = kDefaultLeakySlope;
    double output_bias_init = kClassicalOutputBiasInit;  ///< classical only
};

/// The five model configurations: classical, qugan36, qugan66, qugan72,
/// qugan132. Returns nullopt for anything else.
[[nodiscard]] std::optional<GeneratorConfig> generator_config_for(std::string_view model);

[[nodiscard]] const std::vector<std::string> &model_names();

/// Expected trainable-parameter count of a named model (136 for classical).
[[nodiscard]] std::size_t expected_param_count(std::string_view model);

struct Generated {
    GraphSample sample;
    bool degenerate = false;  ///< all-zero raw output, replaced by uniform 1/6
};

/// Gradient of sum_i upstream_i * (raw_i / S) w.r.t. raw, S = sum raw:
/// g_j = upstream_j / S - (upstream . raw) / S^2.
[[nodiscard]] std::vector<double> renormalize_vjp(std::span<const double> raw,
                                                  std::span<const double> upstream);

/**
 * A generator mapping 6-dim latent noise to a normalized 4-node graph, either
 * an MLP with ReLU output or a variational circuit read out as per-qubit
 * P(|0>). Raw outputs are renormalized to sum one.
 */
class Generator {
  public:
    /// Classical weights follow Mlp::init_uniform with the output bias set
    /// to config.output_bias_init; quantum angles ~ U(-pi, pi).
    static Generator create(const GeneratorConfig &config, std::mt19937_64 &rng);

    /// Zero-initialized generator; parameters are set through params().
    explicit Generator(const GeneratorConfig &config);

    [[nodiscard]] const GeneratorConfig &config() const noexcept { return config_; }
    [[nodiscard]] std::size_t param_count() const noexcept;
    [[nodiscard]] std::span<double> params() noexcept;
    [[nodiscard]] std::span<const double> params() const noexcept;
    [[nodiscard]] const Mlp &mlp() const;  ///< classical only

    /// Un-normalized output: ReLU activations or qubit marginals.
    [[nodiscard]] std::vector<double> raw_output(std::span<const double> z) const;

    [[nodiscard]] Generated generate(std::span<const double> z) const;

    /// d/d params of sum_i upstream_i * w_i(z), with w the normalized
    /// weights. Degenerate outputs contribute a zero gradient.
    [[nodiscard]] std::vector<double> gradient(std::span<const double> z,
                                               std::span<const double> upstream) const;

  private:
    GeneratorConfig config_;
    std::optional<Mlp> mlp_;
    std::vector<double> angles_;
};

}  // namespace quga
