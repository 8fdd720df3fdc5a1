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

#include <random>
#include <span>
#include <vector>

#include "quga/graph.hpp"

namespace quga {

/// Gaussian KDE over a pooled 1-D support.
struct KdeModel {
    std::vector<double> support;
    double bandwidth = 0.0;

    [[nodiscard]] double density(double x) const;
};

/// Scott's rule: sample std (n - 1 denominator) times n^(-1/5).
[[nodiscard]] double scott_bandwidth(std::span<const double> values);

/// Throws DegenerateError on zero-variance support, ArgumentError on empty.
[[nodiscard]] KdeModel kde_fit(std::span<const double> values);

/// Pools all 6 edge positions of every sample into one support.
[[nodiscard]] KdeModel kde_fit(std::span<const GraphSample> samples);

/// One draw: random support point plus N(0, bandwidth^2) noise.
[[nodiscard]] double kde_sample(const KdeModel &model, std::mt19937_64 &rng);

/**
 * Six i.i.d. KDE draws, negatives clamped to 0. With `renormalize` the
 * weights are divided by their sum (the generator post-processing); an
 * all-zero draw is redrawn.
 */
[[nodiscard]] GraphSample kde_sample_graph(const KdeModel &model, std::mt19937_64 &rng,
                                           bool renormalize = true);

}  // namespace quga
