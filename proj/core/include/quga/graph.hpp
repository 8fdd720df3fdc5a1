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
#include <span>
#include <utility>

namespace quga {

inline constexpr std::size_t kNodes = 4;
inline constexpr std::size_t kEdges = 6;

/// Canonical edge order: (0,1) (0,2) (0,3) (1,2) (1,3) (2,3).
inline constexpr std::array<std::pair<std::size_t, std::size_t>, kEdges> kEdgePairs{{
    {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Position of the undirected edge {a, b} in the canonical order.
[[nodiscard]] constexpr std::size_t edge_index(std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    // Offsets of the rows starting at node 0, 1, 2.
    constexpr std::array<std::size_t, 3> row{0, 3, 5};
    return row[a] + (b - a - 1);
}

using EdgeWeights = std::array<double, kEdges>;

/// Edge weights of a complete 4-node graph, normalized to sum one.
struct GraphSample {
    EdgeWeights weights{};

    friend bool operator==(const GraphSample &, const GraphSample &) = default;
};

inline constexpr double kDegenerateSum = 1e-12;

/// Divides each weight by the total. Throws DegenerateError if the total is
/// <= 1e-12 and ArgumentError on a negative or non-finite entry.
[[nodiscard]] GraphSample normalize_edges(const EdgeWeights &raw);

/// True when all weights are finite, nonnegative and sum to one within tol.
[[nodiscard]] bool satisfies_sample_contract(const GraphSample &g, double tol = 1e-9) noexcept;

}  // namespace quga
