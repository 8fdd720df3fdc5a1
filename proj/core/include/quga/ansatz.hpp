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
#include <span>
#include <string_view>
#include <vector>

#include "quga/statevector.hpp"

namespace quga {

/// Rotation block content of the 2-local generator circuits.
enum class AnsatzFamily : std::uint8_t {
    RxFixedY,  ///< RX ladder then a fixed Pauli-Y ladder (n params per block)
    RxRy,      ///< RX ladder then an RY ladder (2n params per block)
};

enum class EmbeddingAxis : std::uint8_t { RY, RX };

[[nodiscard]] std::string_view to_string(AnsatzFamily family) noexcept;
[[nodiscard]] std::string_view to_string(EmbeddingAxis axis) noexcept;

/**
 * Declarative generator circuit: L repetitions of [rotation block, CNOT ring]
 * followed by one final rotation block, so there are L + 1 rotation blocks.
 */
struct AnsatzSpec {
    AnsatzFamily family = AnsatzFamily::RxFixedY;
    std::size_t layers = 5;
    std::size_t n_qubits = 6;

    [[nodiscard]] std::size_t params_per_block() const noexcept {
        return family == AnsatzFamily::RxRy ? 2 * n_qubits : n_qubits;
    }

    friend bool operator==(const AnsatzSpec &, const AnsatzSpec &) = default;
};

[[nodiscard]] std::size_t param_count(const AnsatzSpec &spec) noexcept;

enum class GateKind : std::uint8_t { RX, RY, PauliY, CNOT };

/// One gate of a flattened circuit. `param` indexes the trainable vector,
/// or is kNoParam for embedding gates and fixed gates.
struct GateOp {
    static constexpr std::size_t kNoParam = static_cast<std::size_t>(-1);

    GateKind kind;
    std::size_t wire0;
    std::size_t wire1 = 0;
    double angle = 0.0;
    std::size_t param = kNoParam;
};

void apply_gate(Statevector &state, const GateOp &op);

/// Applies one rotation per wire with angle z[i]. Throws ArgumentError when
/// z.size() != state.n_qubits().
void angle_embed(Statevector &state, std::span<const double> z,
                 EmbeddingAxis axis = EmbeddingAxis::RY);

/// Embedding followed by the ansatz, as a flat gate list.
[[nodiscard]] std::vector<GateOp> build_circuit(const AnsatzSpec &spec,
                                                std::span<const double> params,
                                                std::span<const double> z,
                                                EmbeddingAxis axis);

/// Marginal P(|0>) per wire after running the generator circuit.
[[nodiscard]] std::vector<double> run_generator_circuit(
    const AnsatzSpec &spec, std::span<const double> params,
    std::span<const double> z, EmbeddingAxis axis = EmbeddingAxis::RY);

/// Row-major n_qubits x P matrix of d marginal_i / d theta_j.
struct Jacobian {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    [[nodiscard]] double operator()(std::size_t r, std::size_t c) const {
        return data[r * cols + c];
    }
};

/// Two-term shift rule: [f(theta_j + pi/2) - f(theta_j - pi/2)] / 2.
[[nodiscard]] Jacobian param_shift_jacobian(
    const AnsatzSpec &spec, std::span<const double> params,
    std::span<const double> z, EmbeddingAxis axis = EmbeddingAxis::RY);

/// upstream^T * Jacobian computed with a single adjoint sweep over the
/// diagonal observable sum_i upstream_i * |0><0|_i. Agrees with
/// param_shift_jacobian to rounding.
[[nodiscard]] std::vector<double> adjoint_vjp(
    const AnsatzSpec &spec, std::span<const double> params,
    std::span<const double> z, std::span<const double> upstream,
    EmbeddingAxis axis = EmbeddingAxis::RY);

}  // namespace quga
