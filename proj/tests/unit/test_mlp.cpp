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

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "quga/errors.hpp"
#include "quga/mlp.hpp"

namespace {

using quga::Activation;
using quga::Mlp;

double dot(const std::vector<double> &a, const std::vector<double> &b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

TEST(Mlp, DiscriminatorShape) {
    const Mlp d = quga::build_discriminator();
    EXPECT_EQ(d.param_count(), 129U);
    EXPECT_EQ(d.layer_sizes(), (std::vector<std::size_t>{6, 16, 1}));
    EXPECT_EQ(d.bias_offset(0) - d.weight_offset(0), 16U * 6U);
    EXPECT_EQ(d.weight_offset(1) - d.bias_offset(0), 16U);
    EXPECT_EQ(d.bias_offset(1) - d.weight_offset(1), 16U);
    EXPECT_EQ(d.param_count() - d.bias_offset(1), 1U);
    EXPECT_EQ(d.hidden_activation(), Activation::LeakyReLU);
    EXPECT_EQ(d.output_activation(), Activation::Sigmoid);
}

TEST(Mlp, ClassicalGeneratorShape) {
    const Mlp g = quga::build_classical_generator();
    EXPECT_EQ(g.param_count(), 136U);
    EXPECT_EQ(g.input_dim(), 6U);
    EXPECT_EQ(g.output_dim(), 6U);
    EXPECT_EQ(g.layer_sizes(), (std::vector<std::size_t>{6, 10, 6}));
    EXPECT_EQ(g.output_activation(), Activation::ReLU);
}

TEST(Mlp, ForwardExamples) {
    const Mlp d = quga::build_discriminator();
    const auto out = d.predict(std::vector<double>{1, -2, 3, -4, 5, -6});
    ASSERT_EQ(out.size(), 1U);
    EXPECT_EQ(out[0], 0.5);

    Mlp unit({1, 1}, Activation::None, Activation::ReLU);
    unit.weight(0, 0, 0) = 1.0;
    EXPECT_EQ(unit.predict(std::vector<double>{-3.0})[0], 0.0);
    EXPECT_EQ(unit.predict(std::vector<double>{2.5})[0], 2.5);

    EXPECT_DOUBLE_EQ(quga::activate(Activation::LeakyReLU, -1.0, 0.01), -0.01);
    EXPECT_DOUBLE_EQ(quga::activate(Activation::LeakyReLU, -1.0, 0.2), -0.2);
}

TEST(Mlp, ForwardDimensionMismatch) {
    const Mlp d = quga::build_discriminator();
    EXPECT_THROW((void)d.forward(std::vector<double>(5)), quga::ArgumentError);
    const auto fwd = d.forward(std::vector<double>(6));
    EXPECT_THROW((void)d.backward(fwd.cache, std::vector<double>(2)), quga::ArgumentError);
}

TEST(Mlp, OutputRanges) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> n01(0.0, 3.0);
    Mlp d = quga::build_discriminator();
    Mlp g = quga::build_classical_generator();
    d.init_uniform(rng);
    g.init_uniform(rng);
    for (auto &p : d.params()) p *= 5;
    for (int i = 0; i < 500; ++i) {
        std::vector<double> x(6);
        for (auto &v : x) v = n01(rng);
        const double y = d.predict(x)[0];
        EXPECT_GE(y, 0.0);
        EXPECT_LE(y, 1.0);
        for (double v : g.predict(x)) EXPECT_GE(v, 0.0);
    }
}

TEST(Mlp, InitUniformBounds) {
    std::mt19937_64 rng(4);
    Mlp d = quga::build_discriminator();
    d.init_uniform(rng);
    for (std::size_t r = 0; r < 16; ++r) {
        EXPECT_EQ(d.bias(0, r), 0.0);
        for (std::size_t c = 0; c < 6; ++c) EXPECT_LE(std::abs(d.weight(0, r, c)), std::sqrt(1.0 / 6));
    }
    for (std::size_t c = 0; c < 16; ++c) EXPECT_LE(std::abs(d.weight(1, 0, c)), 0.25);
    EXPECT_EQ(d.bias(1, 0), 0.0);
}

TEST(Mlp, ZeroUpstreamGivesZeroTape) {
    std::mt19937_64 rng(2);
    Mlp g = quga::build_classical_generator();
    g.init_uniform(rng);
    const auto fwd = g.forward(std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5, 0.6});
    const auto tape = g.backward(fwd.cache, std::vector<double>(6, 0.0));
    for (double v : tape.params) EXPECT_EQ(v, 0.0);
    for (double v : tape.input) EXPECT_EQ(v, 0.0);
}

TEST(Mlp, LinearLayerOuterProduct) {
    Mlp lin({3, 2}, Activation::None, Activation::None);
    const std::vector<double> x{1.5, -2.0, 0.5};
    const std::vector<double> u{0.3, -0.7};
    const auto tape = lin.backward(lin.forward(x).cache, u);
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            EXPECT_DOUBLE_EQ(tape.params[lin.weight_offset(0) + r * 3 + c], u[r] * x[c]);
        }
        EXPECT_DOUBLE_EQ(tape.params[lin.bias_offset(0) + r], u[r]);
    }
}

TEST(MlpProperty, BackwardMatchesFiniteDifferences) {
    std::mt19937_64 rng(31337);
    std::normal_distribution<double> n01;
    for (int trial = 0; trial < 20; ++trial) {
        Mlp model = trial % 2 ? quga::build_classical_generator() : quga::build_discriminator();
        model.init_uniform(rng);
        for (auto &p : model.params()) p += 0.1 * n01(rng);  // nonzero biases too
        std::vector<double> x(6);
        for (auto &v : x) v = n01(rng);
        std::vector<double> u(model.output_dim());
        for (auto &v : u) v = n01(rng);

        const auto tape = model.backward(model.forward(x).cache, u);
        const std::vector<double> theta(model.params().begin(), model.params().end());
        auto loss_of_params = [&](const std::vector<double> &p) {
            Mlp m = model;
            std::copy(p.begin(), p.end(), m.params().begin());
            return dot(m.predict(x), u);
        };
        auto loss_of_input = [&](const std::vector<double> &in) { return dot(model.predict(in), u); };
        const auto g_params = quga::testing::numerical_gradient(loss_of_params, theta, 1e-5);
        const auto g_input = quga::testing::numerical_gradient(loss_of_input, x, 1e-5);
        for (std::size_t i = 0; i < theta.size(); ++i) {
            ASSERT_TRUE(quga::testing::close_relative(tape.params[i], g_params[i], 1e-4, 1e-6))
                << "trial " << trial << " param " << i << ": " << tape.params[i] << " vs "
                << g_params[i];
        }
        for (std::size_t i = 0; i < x.size(); ++i) {
            ASSERT_TRUE(quga::testing::close_relative(tape.input[i], g_input[i], 1e-4, 1e-6));
        }
    }
}

TEST(Mlp, ForwardIsPure) {
    std::mt19937_64 rng(8);
    Mlp d = quga::build_discriminator();
    d.init_uniform(rng);
    const std::vector<double> x{0.2, 0.1, 0.3, 0.05, 0.15, 0.2};
    EXPECT_EQ(d.predict(x), d.predict(x));
}

}  // namespace
