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

#include "quga/kde.hpp"

#include <cmath>
#include <numbers>

#include "quga/errors.hpp"
#include "quga/evaluation.hpp"

namespace quga {

double KdeModel::density(double x) const {
    const double norm = 1.0 / (bandwidth * std::sqrt(2.0 * std::numbers::pi) *
                               static_cast<double>(support.size()));
    double acc = 0.0;
    for (double s : support) {
        const double u = (x - s) / bandwidth;
        acc += std::exp(-0.5 * u * u);
    }
    return acc * norm;
}

double scott_bandwidth(std::span<const double> values) {
    const auto n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= n;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double sd = values.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
    return sd * std::pow(n, -0.2);
}

KdeModel kde_fit(std::span<const double> values) {
    if (values.empty()) throw ArgumentError("KDE support must be non-empty");
    KdeModel m{{values.begin(), values.end()}, scott_bandwidth(values)};
    if (!(m.bandwidth > 0.0)) {
        throw DegenerateError("KDE support has zero variance; bandwidth undefined");
    }
    return m;
}

KdeModel kde_fit(std::span<const GraphSample> samples) {
    const auto values = pooled_weights(samples);
    return kde_fit(std::span<const double>(values));
}

double kde_sample(const KdeModel &model, std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::size_t> pick(0, model.support.size() - 1);
    std::normal_distribution<double> noise(0.0, 1.0);
    const double base = model.support[pick(rng)];
    return base + model.bandwidth * noise(rng);
}

GraphSample kde_sample_graph(const KdeModel &model, std::mt19937_64 &rng, bool renormalize) {
    while (true) {
        EdgeWeights raw{};
        double total = 0.0;
        for (auto &w : raw) {
            w = std::max(0.0, kde_sample(model, rng));
            total += w;
        }
        if (total <= kDegenerateSum) continue;
        if (!renormalize) return GraphSample{raw};
        return normalize_edges(raw);
    }
}

}  // namespace quga
