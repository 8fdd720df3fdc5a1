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

#include "quga/evaluation.hpp"

#include <algorithm>
#include <cmath>

#include "quga/errors.hpp"

namespace quga {

TriangleReport triangle_valid(const EdgeWeights &w, double tolerance) {
    TriangleReport report;
    for (const auto &t : kTriples) {
        const double ab = w[edge_index(t[0], t[1])];
        const double ac = w[edge_index(t[0], t[2])];
        const double bc = w[edge_index(t[1], t[2])];
        // Each side against the other two; at most one can fail.
        const std::array<double, 3> slack{ab - (ac + bc), ac - (ab + bc), bc - (ab + ac)};
        const double worst = *std::max_element(slack.begin(), slack.end());
        if (worst > tolerance * (ab + ac + bc)) {
            report.valid = false;
            report.first_violation = TriangleViolation{t, worst};
            return report;
        }
    }
    return report;
}

std::size_t valid_count(std::span<const GraphSample> samples) {
    return static_cast<std::size_t>(std::count_if(
        samples.begin(), samples.end(), [](const GraphSample &g) { return triangle_valid(g).valid; }));
}

double valid_fraction(std::span<const GraphSample> samples) {
    if (samples.empty()) throw ArgumentError("valid_fraction of an empty sample set");
    return static_cast<double>(valid_count(samples)) / static_cast<double>(samples.size());
}

std::vector<double> pooled_weights(std::span<const GraphSample> samples) {
    std::vector<double> out;
    out.reserve(samples.size() * kEdges);
    for (const auto &g : samples) out.insert(out.end(), g.weights.begin(), g.weights.end());
    return out;
}

double pooled_weight_std(std::span<const GraphSample> samples) {
    if (samples.empty()) throw ArgumentError("pooled_weight_std of an empty sample set");
    const auto values = pooled_weights(samples);
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return std::sqrt(ss / static_cast<double>(values.size()));
}

DensityHistogram histogram(std::span<const double> values, std::size_t bins, double lo,
                           double hi) {
    if (bins < 2) throw ArgumentError("histogram needs at least 2 bins");
    if (values.empty()) throw ArgumentError("histogram of an empty sample set");
    if (!(hi > lo)) throw ArgumentError("histogram range must satisfy lo < hi");

    DensityHistogram h;
    const double width = (hi - lo) / static_cast<double>(bins);
    h.bin_edges.resize(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i) h.bin_edges[i] = lo + width * static_cast<double>(i);
    h.bin_edges.back() = hi;

    std::vector<std::size_t> counts(bins, 0);
    std::size_t inside = 0;
    for (double v : values) {
        if (v < lo || v > hi) continue;
        auto bin = static_cast<std::size_t>((v - lo) / width);
        bin = std::min(bin, bins - 1);
        ++counts[bin];
        ++inside;
    }
    h.densities.assign(bins, 0.0);
    if (inside == 0) return h;
    for (std::size_t i = 0; i < bins; ++i) {
        const double w = h.bin_edges[i + 1] - h.bin_edges[i];
        h.densities[i] = static_cast<double>(counts[i]) / (static_cast<double>(inside) * w);
    }
    return h;
}

DensityHistogram histogram(std::span<const double> values, std::size_t bins) {
    if (values.empty()) throw ArgumentError("histogram of an empty sample set");
    const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    double lo = *mn;
    double hi = *mx;
    if (!(hi > lo)) {
        const double half = std::max(std::abs(lo) * 1e-6, 1e-9);
        lo -= half;
        hi += half;
    }
    return histogram(values, bins, lo, hi);
}

DensityHistogram histogram(std::span<const GraphSample> samples, std::size_t bins) {
    const auto values = pooled_weights(samples);
    return histogram(std::span<const double>(values), bins);
}

}  // namespace quga
