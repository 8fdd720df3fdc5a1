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

// Test-only reference implementations. Nothing here calls the code paths it
// is used to check.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

namespace quga::testing {

/// Central difference of a scalar function along coordinate `i`.
inline double central_difference(const std::function<double(const std::vector<double> &)> &f,
                                 std::vector<double> x, std::size_t i, double h) {
    const double orig = x[i];
    x[i] = orig + h;
    const double plus = f(x);
    x[i] = orig - h;
    const double minus = f(x);
    return (plus - minus) / (2 * h);
}

inline std::vector<double> numerical_gradient(
    const std::function<double(const std::vector<double> &)> &f, const std::vector<double> &x,
    double h) {
    std::vector<double> g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) g[i] = central_difference(f, x, i, h);
    return g;
}

/// |a - b| <= rel * max(|a|, |b|) + abs_floor
inline bool close_relative(double a, double b, double rel, double abs_floor) {
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)) + abs_floor;
}

/// Position of edge {a, b} by explicit table lookup.
inline std::size_t oracle_edge(std::size_t a, std::size_t b) {
    static constexpr std::size_t table[4][4] = {
        {99, 0, 1, 2}, {0, 99, 3, 4}, {1, 3, 99, 5}, {2, 4, 5, 99}};
    return table[a][b];
}

/// The 12 directed inequalities d(a,b) <= d(a,c) + d(c,b), with the slack
/// measured against the perimeter of {a, b, c}.
inline bool brute_force_triangle_valid(const std::array<double, 6> &w, double tol) {
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = a + 1; b < 4; ++b) {
            for (std::size_t c = 0; c < 4; ++c) {
                if (c == a || c == b) continue;
                const double ab = w[oracle_edge(a, b)];
                const double ac = w[oracle_edge(a, c)];
                const double cb = w[oracle_edge(c, b)];
                if (ab - (ac + cb) > tol * (ab + ac + cb)) return false;
            }
        }
    }
    return true;
}

/// Weights of the graph whose node k is the original node perm[k].
inline std::array<double, 6> permute_nodes(const std::array<double, 6> &w,
                                           const std::array<std::size_t, 4> &perm) {
    std::array<double, 6> out{};
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = a + 1; b < 4; ++b) {
            out[oracle_edge(a, b)] = w[oracle_edge(perm[a], perm[b])];
        }
    }
    return out;
}

/// Pairwise Euclidean distances of 4 random points in the unit cube; always a
/// metric, so every triangle holds.
inline std::array<double, 6> random_metric_weights(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::array<std::array<double, 3>, 4> pts{};
    for (auto &p : pts) {
        for (auto &c : p) c = u(rng);
    }
    std::array<double, 6> w{};
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = a + 1; b < 4; ++b) {
            double d2 = 0.0;
            for (std::size_t k = 0; k < 3; ++k) d2 += (pts[a][k] - pts[b][k]) * (pts[a][k] - pts[b][k]);
            w[oracle_edge(a, b)] = std::sqrt(d2);
        }
    }
    return w;
}

/**
 * Random weight vectors mixing plain uniform draws, metric vectors, and
 * adversarial cases: one triangle of a metric vector pushed to exactly equal /
 * just inside / just outside the tolerance boundary, and vectors with zero
 * edges.
 */
inline std::array<double, 6> random_weights(std::mt19937_64 &rng, double tol) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int kind = static_cast<int>(u(rng) * 6);
    if (kind == 0) {
        std::array<double, 6> w{};
        for (auto &x : w) x = u(rng);
        return w;
    }
    auto w = random_metric_weights(rng);
    if (kind == 1) return w;
    // Choose a triangle and make edge ab its long side.
    std::array<std::size_t, 4> nodes{0, 1, 2, 3};
    std::shuffle(nodes.begin(), nodes.end(), rng);
    const std::size_t a = nodes[0], b = nodes[1], c = nodes[2];
    const double ac = w[oracle_edge(a, c)];
    const double cb = w[oracle_edge(c, b)];
    const double tie = ac + cb;
    const double slack_unit = tol * 2 * tie;  // perimeter of an exact tie
    switch (kind) {
    case 2:
        w[oracle_edge(a, b)] = tie;  // exact tie
        break;
    case 3:
        w[oracle_edge(a, b)] = tie + 0.5 * slack_unit;  // inside tolerance
        break;
    case 4:
        w[oracle_edge(a, b)] = tie + 2.0 * slack_unit;  // just outside
        break;
    default:
        w[oracle_edge(a, c)] = 0.0;  // zero edge
        break;
    }
    return w;
}

/// Dense 2^n statevector applying gates through explicit matrices, used to
/// cross-check the simulator's bit-twiddling kernels.
struct DenseReference {
    std::size_t n;
    std::vector<std::complex<double>> amps;

    explicit DenseReference(std::size_t qubits) : n(qubits), amps(std::size_t{1} << qubits) {
        amps[0] = 1.0;
    }

    void apply_1q(std::size_t q, const std::array<std::complex<double>, 4> &m) {
        std::vector<std::complex<double>> next(amps.size());
        for (std::size_t i = 0; i < amps.size(); ++i) {
            const std::size_t bit = (i >> q) & 1U;
            const std::size_t i0 = i & ~(std::size_t{1} << q);
            const std::size_t i1 = i0 | (std::size_t{1} << q);
            next[i] = m[bit * 2 + 0] * amps[i0] + m[bit * 2 + 1] * amps[i1];
        }
        amps = std::move(next);
    }

    void cnot(std::size_t c, std::size_t t) {
        std::vector<std::complex<double>> next(amps.size());
        for (std::size_t i = 0; i < amps.size(); ++i) {
            const std::size_t j = ((i >> c) & 1U) ? (i ^ (std::size_t{1} << t)) : i;
            next[j] = amps[i];
        }
        amps = std::move(next);
    }

    [[nodiscard]] double prob_zero(std::size_t q) const {
        double p = 0.0;
        for (std::size_t i = 0; i < amps.size(); ++i) {
            if (!((i >> q) & 1U)) p += std::norm(amps[i]);
        }
        return p;
    }
};

}  // namespace quga::testing
