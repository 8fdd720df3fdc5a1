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

#include "quga/ansatz.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "quga/errors.hpp"

namespace quga {

std::string_view to_string(AnsatzFamily family) noexcept {
    return family == AnsatzFamily::RxRy ? "rx_ry" : "rx_fixed_y";
}

std::string_view to_string(EmbeddingAxis axis) noexcept {
    return axis == EmbeddingAxis::RX ? "rx" : "ry";
}

std::size_t param_count(const AnsatzSpec &spec) noexcept {
    return spec.params_per_block() * (spec.layers + 1);
}

void apply_gate(Statevector &state, const GateOp &op) {
    switch (op.kind) {
    case GateKind::RX:
        state.apply_rx(op.wire0, op.angle);
        break;
    case GateKind::RY:
        state.apply_ry(op.wire0, op.angle);
        break;
    case GateKind::PauliY:
        state.apply_pauli_y(op.wire0);
        break;
    case GateKind::CNOT:
        state.apply_cnot(op.wire0, op.wire1);
        break;
    }
}

namespace {

void check_lengths(const AnsatzSpec &spec, std::span<const double> params,
                   std::span<const double> z) {
    if (spec.layers < 1) throw ConfigError("ansatz needs at least one layer");
    if (params.size() != param_count(spec)) {
        throw ArgumentError("ansatz expects " +
                            std::to_string(param_count(spec)) +
                            " parameters, got " +
                            std::to_string(params.size()));
    }
    if (z.size() != spec.n_qubits) {
        throw ArgumentError("latent vector must have " +
                            std::to_string(spec.n_qubits) + " entries, got " +
                            std::to_string(z.size()));
    }
}

void append_rotation_block(const AnsatzSpec &spec,
                           std::span<const double> params, std::size_t block,
                           std::vector<GateOp> &ops) {
    const std::size_t n = spec.n_qubits;
    const std::size_t base = block * spec.params_per_block();
    for (std::size_t q = 0; q < n; ++q) {
        ops.push_back({GateKind::RX, q, 0, params[base + q], base + q});
    }
    for (std::size_t q = 0; q < n; ++q) {
        if (spec.family == AnsatzFamily::RxRy) {
            ops.push_back(
                {GateKind::RY, q, 0, params[base + n + q], base + n + q});
        } else {
            ops.push_back({GateKind::PauliY, q});
        }
    }
}

// Circular entanglement 0->1, 1->2, ..., (n-1)->0.
void append_cnot_ring(std::size_t n, std::vector<GateOp> &ops) {
    if (n < 2) return;
    for (std::size_t q = 0; q < n; ++q) {
        ops.push_back({GateKind::CNOT, q, (q + 1) % n});
    }
}

Statevector simulate(const std::vector<GateOp> &ops, std::size_t n_qubits) {
    Statevector state(n_qubits);
    for (const auto &op : ops) apply_gate(state, op);
    return state;
}

std::vector<double> clamped_marginals(const Statevector &state) {
    auto probs = state.marginals_zero();
    for (auto &p : probs) p = std::clamp(p, 0.0, 1.0);
    return probs;
}

// Inverse of a gate; every gate here is either self-inverse or a rotation.
GateOp adjoint_of(const GateOp &op) {
    GateOp inv = op;
    if (op.kind == GateKind::RX || op.kind == GateKind::RY) {
        inv.angle = -op.angle;
    }
    return inv;
}

}  // namespace

void angle_embed(Statevector &state, std::span<const double> z,
                 EmbeddingAxis axis) {
    if (z.size() != state.n_qubits()) {
        throw ArgumentError("embedding needs one angle per qubit");
    }
    for (std::size_t q = 0; q < z.size(); ++q) {
        if (axis == EmbeddingAxis::RY) {
            state.apply_ry(q, z[q]);
        } else {
            state.apply_rx(q, z[q]);
        }
    }
}

std::vector<GateOp> build_circuit(const AnsatzSpec &spec,
                                  std::span<const double> params,
                                  std::span<const double> z,
                                  EmbeddingAxis axis) {
    check_lengths(spec, params, z);
    std::vector<GateOp> ops;
    ops.reserve(spec.n_qubits * (3 * (spec.layers + 1) + 1));
    const GateKind embed_kind =
        axis == EmbeddingAxis::RY ? GateKind::RY : GateKind::RX;
    for (std::size_t q = 0; q < spec.n_qubits; ++q) {
        ops.push_back({embed_kind, q, 0, z[q]});
    }
    for (std::size_t layer = 0; layer < spec.layers; ++layer) {
        append_rotation_block(spec, params, layer, ops);
        append_cnot_ring(spec.n_qubits, ops);
    }
    append_rotation_block(spec, params, spec.layers, ops);
    return ops;
}

std::vector<double> run_generator_circuit(const AnsatzSpec &spec,
                                          std::span<const double> params,
                                          std::span<const double> z,
                                          EmbeddingAxis axis) {
    const auto ops = build_circuit(spec, params, z, axis);
    return clamped_marginals(simulate(ops, spec.n_qubits));
}

Jacobian param_shift_jacobian(const AnsatzSpec &spec,
                              std::span<const double> params,
                              std::span<const double> z, EmbeddingAxis axis) {
    auto ops = build_circuit(spec, params, z, axis);
    const std::size_t n_params = params.size();
    Jacobian jac{spec.n_qubits, n_params,
                 std::vector<double>(spec.n_qubits * n_params, 0.0)};

    constexpr double kShift = std::numbers::pi / 2;
    for (auto &op : ops) {
        if (op.param == GateOp::kNoParam) continue;
        const double original = op.angle;
        op.angle = original + kShift;
        const auto plus = simulate(ops, spec.n_qubits).marginals_zero();
        op.angle = original - kShift;
        const auto minus = simulate(ops, spec.n_qubits).marginals_zero();
        op.angle = original;
        for (std::size_t i = 0; i < spec.n_qubits; ++i) {
            jac.data[i * n_params + op.param] = (plus[i] - minus[i]) / 2;
        }
    }
    return jac;
}

std::vector<double> adjoint_vjp(const AnsatzSpec &spec,
                                std::span<const double> params,
                                std::span<const double> z,
                                std::span<const double> upstream,
                                EmbeddingAxis axis) {
    if (upstream.size() != spec.n_qubits) {
        throw ArgumentError("upstream gradient must have one entry per qubit");
    }
    const auto ops = build_circuit(spec, params, z, axis);
    Statevector phi = simulate(ops, spec.n_qubits);

    // lambda = O |psi> with O = sum_i u_i (I + Z_i) / 2, diagonal.
    Statevector lambda = phi;
    {
        auto amps = lambda.amplitudes();
        for (std::size_t b = 0; b < amps.size(); ++b) {
            double weight = 0.0;
            for (std::size_t q = 0; q < spec.n_qubits; ++q) {
                if (!((b >> q) & 1U)) weight += upstream[q];
            }
            amps[b] *= weight;
        }
    }

    std::vector<double> grad(params.size(), 0.0);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        const GateOp &op = *it;
        if (op.param != GateOp::kNoParam) {
            // d/dtheta <O> = 2 Re <lambda| (-i G / 2) |phi> = Im <lambda|G|phi>
            Statevector mu = phi;
            if (op.kind == GateKind::RX) {
                mu.apply_1q(op.wire0, {0, 0}, {1, 0}, {1, 0}, {0, 0});
            } else {
                mu.apply_pauli_y(op.wire0);
            }
            grad[op.param] += inner(lambda, mu).imag();
        }
        const GateOp inv = adjoint_of(op);
        apply_gate(phi, inv);
        apply_gate(lambda, inv);
    }
    return grad;
}

}  // namespace quga
