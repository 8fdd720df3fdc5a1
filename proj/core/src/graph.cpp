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

#include "quga/graph.hpp"

#include <cmath>

#include "quga/errors.hpp"

namespace quga {

GraphSample normalize_edges(const EdgeWeights &raw) {
    double total = 0.0;
    for (double w : raw) {
        if (!std::isfinite(w) || w < 0.0) {
            throw ArgumentError("edge weights must be finite and nonnegative");
        }
        total += w;
    }
    if (total <= kDegenerateSum) {
        throw DegenerateError("edge weights sum to zero; cannot normalize");
    }
    GraphSample g;
    for (std::size_t i = 0; i < kEdges; ++i) g.weights[i] = raw[i] / total;
    return g;
}

bool satisfies_sample_contract(const GraphSample &g, double tol) noexcept {
    double total = 0.0;
    for (double w : g.weights) {
        if (!std::isfinite(w) || w < 0.0) return false;
        total += w;
    }
    return std::abs(total - 1.0) <= tol;
}

}  // namespace quga
