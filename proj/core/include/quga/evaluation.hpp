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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "quga/graph.hpp"

namespace quga {

/// Slack admitted on every triangle comparison, relative to the triangle's
/// perimeter so the verdict is invariant under scaling. Normalized samples
/// have perimeters below 1, so this only admits floating-point ties.
inline constexpr double kTriangleTolerance = 1e-9;

/// Node triples in canonical order: 012, 013, 023, 123.
inline constexpr std::array<std::array<std::size_t, 3>, 4> kTriples{{
    {0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};

struct TriangleViolation {
    std::array<std::size_t, 3> triple{};
    /// Excess of the long side over the sum of the other two.
    double slack = 0.0;
};

struct TriangleReport {
    bool valid = true;
    std::optional<TriangleViolation> first_violation;
};

[[nodiscard]] TriangleReport triangle_valid(const EdgeWeights &weights,
                                            double tolerance = kTriangleTolerance);
[[nodiscard]] inline TriangleReport triangle_valid(const GraphSample &g,
                                                   double tolerance = kTriangleTolerance) {
    return triangle_valid(g.weights, tolerance);
}

[[nodiscard]] std::size_t valid_count(std::span<const GraphSample> samples);

/// Throws ArgumentError on an empty set.
[[nodiscard]] double valid_fraction(std::span<const GraphSample> samples);

/// Population standard deviation over all 6 N weights pooled.
[[nodiscard]] double pooled_weight_std(std::span<const GraphSample> samples);

/// All 6 N weights in sample order.
[[nodiscard]] std::vector<double> pooled_weights(std::span<const GraphSample> samples);

struct DensityHistogram {
    std::vector<double> bin_edges;  ///< bins + 1 sorted edges
    std::vector<double> densities;  ///< integrate to 1 over the edges
};

/// Density histogram of `values` over [lo, hi]; values equal to hi land in
/// the last bin and values outside the range are dropped before normalizing.
[[nodiscard]] DensityHistogram histogram(std::span<const double> values, std::size_t bins,
                                         double lo, double hi);

/// Range taken from the data. A constant sample gets a narrow band around
/// the value so all mass falls into a single bin.
[[nodiscard]] DensityHistogram histogram(std::span<const double> values, std::size_t bins);

[[nodiscard]] DensityHistogram histogram(std::span<const GraphSample> samples, std::size_t bins);

}  // namespace quga
