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

#include "quga/mlp.hpp"

#include <cmath>
#include <string>

#include "quga/errors.hpp"

namespace quga {

std::string_view to_string(Activation act) noexcept {
    switch (act) {
    case Activation::LeakyReLU:
        return "leaky_relu";
    case Activation::ReLU:
        return "relu";
    case Activation::Sigmoid:
        return "sigmoid";
    case Activation::None:
        break;
    }
    return "none";
}

double activate(Activation act, double x, double leaky_slope) {
    switch (act) {
    case Activation::LeakyReLU:
        return x >= 0.0 ? x : leaky_slope * x;
    case Activation::ReLU:
        return x > 0.0 ? x : 0.0;
    case Activation::Sigmoid:
        if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
        {
            const double e = std::exp(x);
            return e / (1.0 + e);
        }
    case Activation::None:
        break;
    }
    return x;
}

double activate_grad(Activation act, double pre, double leaky_slope) {
    switch (act) {
    case Activation::LeakyReLU:
        return pre >= 0.0 ? 1.0 : leaky_slope;
    case Activation::ReLU:
        return pre > 0.0 ? 1.0 : 0.0;
    case Activation::Sigmoid: {
        const double s = activate(Activation::Sigmoid, pre, leaky_slope);
        return s * (1.0 - s);
    }
    case Activation::None:
        break;
    }
    return 1.0;
}

Mlp::Mlp(std::vector<std::size_t> layer_sizes, Activation hidden,
         Activation output, double leaky_slope)
    : sizes_(std::move(layer_sizes)), hidden_(hidden), output_(output),
      slope_(leaky_slope) {
    if (sizes_.size() < 2) {
        throw ConfigError("an MLP needs at least input and output sizes");
    }
    std::size_t total = 0;
    for (std::size_t k = 0; k + 1 < sizes_.size(); ++k) {
        if (sizes_[k] == 0 || sizes_[k + 1] == 0) {
            throw ConfigError("MLP layer sizes must be positive");
        }
        offsets_.push_back(total);
        total += sizes_[k] * sizes_[k + 1] + sizes_[k + 1];
    }
    params_.assign(total, 0.0);
}

void Mlp::init_uniform(std::mt19937_64 &rng) {
    for (std::size_t k = 0; k < n_layers(); ++k) {
        const double bound = std::sqrt(1.0 / static_cast<double>(sizes_[k]));
        std::uniform_real_distribution<double> dist(-bound, bound);
        const std::size_t w0 = weight_offset(k);
        const std::size_t b0 = bias_offset(k);
        for (std::size_t i = w0; i < b0; ++i) params_[i] = dist(rng);
        for (std::size_t i = b0; i < b0 + sizes_[k + 1]; ++i) params_[i] = 0.0;
    }
}

ForwardResult Mlp::forward(std::span<const double> input) const {
    if (input.size() != input_dim()) {
        throw ArgumentError("MLP input has " + std::to_string(input.size()) +
                            " entries, expected " + std::to_string(input_dim()));
    }
    ForwardResult result;
    result.cache.inputs.reserve(n_layers());
    result.cache.pre_activations.reserve(n_layers());
    std::vector<double> x(input.begin(), input.end());
    for (std::size_t k = 0; k < n_layers(); ++k) {
        const std::size_t in = sizes_[k];
        const std::size_t out = sizes_[k + 1];
        const double *w = params_.data() + weight_offset(k);
        const double *b = params_.data() + bias_offset(k);
        std::vector<double> pre(out);
        for (std::size_t r = 0; r < out; ++r) {
            double acc = b[r];
            for (std::size_t c = 0; c < in; ++c) acc += w[r * in + c] * x[c];
            pre[r] = acc;
        }
        std::vector<double> y(out);
        const Activation act = activation_for(k);
        for (std::size_t r = 0; r < out; ++r) y[r] = activate(act, pre[r], slope_);
        result.cache.inputs.push_back(std::move(x));
        result.cache.pre_activations.push_back(std::move(pre));
        x = std::move(y);
    }
    result.output = std::move(x);
    return result;
}

std::vector<double> Mlp::predict(std::span<const double> input) const {
    return forward(input).output;
}

GradientTape Mlp::backward(const ForwardCache &cache,
                           std::span<const double> upstream) const {
    if (upstream.size() != output_dim()) {
        throw ArgumentError("upstream gradient has " +
                            std::to_string(upstream.size()) +
                            " entries, expected " + std::to_string(output_dim()));
    }
    if (cache.inputs.size() != n_layers() ||
        cache.pre_activations.size() != n_layers()) {
        throw ArgumentError("forward cache does not match this model");
    }
    GradientTape tape{std::vector<double>(params_.size(), 0.0), {}};
    std::vector<double> delta(upstream.begin(), upstream.end());
    for (std::size_t k = n_layers(); k-- > 0;) {
        const std::size_t in = sizes_[k];
        const std::size_t out = sizes_[k + 1];
        const auto &pre = cache.pre_activations[k];
        const auto &x = cache.inputs[k];
        const Activation act = activation_for(k);
        for (std::size_t r = 0; r < out; ++r) delta[r] *= activate_grad(act, pre[r], slope_);

        double *gw = tape.params.data() + weight_offset(k);
        double *gb = tape.params.data() + bias_offset(k);
        const double *w = params_.data() + weight_offset(k);
        std::vector<double> next(in, 0.0);
        for (std::size_t r = 0; r < out; ++r) {
            gb[r] = delta[r];
            for (std::size_t c = 0; c < in; ++c) {
                gw[r * in + c] = delta[r] * x[c];
                next[c] += w[r * in + c] * delta[r];
            }
        }
        delta = std::move(next);
    }
    tape.input = std::move(delta);
    return tape;
}

Mlp build_discriminator(double leaky_slope) {
    return Mlp({6, 16, 1}, Activation::LeakyReLU, Activation::Sigmoid, leaky_slope);
}

Mlp build_classical_generator(double leaky_slope) {
    return Mlp({6, 10, 6}, Activation::LeakyReLU, Activation::ReLU, leaky_slope);
}

}  // namespace quga
