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
#include <string_view>
#include <vector>

namespace quga {

enum class Activation : std::uint8_t { None = 0, LeakyReLU = 1, ReLU = 2, Sigmoid = 3 };

[[nodiscard]] std::string_view to_string(Activation act) noexcept;

inline constexpr double kDefaultLeakySlope = 0.01;

/// Activations and pre-activations retained by a forward pass.
struct ForwardCache {
    std::vector<std::vector<double>> inputs;           // input to layer k
    std::vector<std::vector<double>> pre_activations;  // W_k x + b_k
};

struct ForwardResult {
    std::vector<double> output;
    ForwardCache cache;
};

/// d loss / d params in the flat parameter layout, plus d loss / d input.
struct GradientTape {
    std::vector<double> params;
    std::vector<double> input;
};

/**
 * Fully connected network stored as one flat parameter vector.
 *
 * Layout is layer-major; within a layer the (out x in) weight matrix comes
 * first in row-major order, followed by the bias vector.
 */
class Mlp {
  public:
    Mlp(std::vector<std::size_t> layer_sizes, Activation hidden,
        Activation output, double leaky_slope = kDefaultLeakySlope);

    [[nodiscard]] const std::vector<std::size_t> &layer_sizes() const noexcept {
        return sizes_;
    }
    [[nodiscard]] std::size_t n_layers() const noexcept { return sizes_.size() - 1; }
    [[nodiscard]] std::size_t input_dim() const noexcept { return sizes_.front(); }
    [[nodiscard]] std::size_t output_dim() const noexcept { return sizes_.back(); }
    [[nodiscard]] Activation hidden_activation() const noexcept { return hidden_; }
    [[nodiscard]] Activation output_activation() const noexcept { return output_; }
    [[nodiscard]] double leaky_slope() const noexcept { return slope_; }

    [[nodiscard]] std::size_t param_count() const noexcept { return params_.size(); }
    [[nodiscard]] std::span<double> params() noexcept { return params_; }
    [[nodiscard]] std::span<const double> params() const noexcept { return params_; }

    /// Offset of layer k's weight block; its bias block follows at
    /// weight_offset(k) + out*in.
    [[nodiscard]] std::size_t weight_offset(std::size_t layer) const {
        return offsets_.at(layer);
    }
    [[nodiscard]] std::size_t bias_offset(std::size_t layer) const {
        return offsets_.at(layer) + sizes_[layer + 1] * sizes_[layer];
    }
    [[nodiscard]] double &weight(std::size_t layer, std::size_t row, std::size_t col) {
        return params_[weight_offset(layer) + row * sizes_[layer] + col];
    }
    [[nodiscard]] double &bias(std::size_t layer, std::size_t row) {
        return params_[bias_offset(layer) + row];
    }

    /// Weights ~ U(-sqrt(1/fan_in), +sqrt(1/fan_in)); biases set to zero.
    void init_uniform(std::mt19937_64 &rng);

    [[nodiscard]] ForwardResult forward(std::span<const double> input) const;

    /// Output only, no cache.
    [[nodiscard]] std::vector<double> predict(std::span<const double> input) const;

    [[nodiscard]] GradientTape backward(const ForwardCache &cache,
                                        std::span<const double> upstream) const;

  private:
    [[nodiscard]] Activation activation_for(std::size_t layer) const noexcept {
        return layer + 1 == n_layers() ? output_ : hidden_;
    }

    std::vector<std::size_t> sizes_;
    std::vector<std::size_t> offsets_;
    std::vector<double> params_;
    Activation hidden_;
    Activation output_;
    double slope_;
};

[[nodiscard]] double activate(Activation act, double x, double leaky_slope);
[[nodiscard]] double activate_grad(Activation act, double pre, double leaky_slope);

/// 6 -> 16 -> 1, LeakyReLU hidden, sigmoid output: 129 parameters.
[[nodiscard]] Mlp build_discriminator(double leaky_slope = kDefaultLeakySlope);

/// 6 -> 10 -> 6, LeakyReLU hidden, ReLU output: 136 parameters.
[[nodiscard]] Mlp build_classical_generator(double leaky_slope = kDefaultLeakySlope);

}  // namespace quga
