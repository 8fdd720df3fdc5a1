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

#include <filesystem>
#include <vector>

#include "quga/ansatz.hpp"
#include "quga/mlp.hpp"

namespace quga {

/*
 * Binary checkpoints. Every integer is an unsigned 64-bit little-endian word
 * and every real an IEEE-754 binary64 little-endian word.
 *
 * MLP file:
 *   "QUGAMLP1"                       8-byte magic
 *   n_sizes, sizes[n_sizes]          layer-size header
 *   hidden_act, output_act           Activation enum values
 *   leaky_slope                      f64
 *   param_count, params[param_count] flat layout of Mlp::params()
 *
 * Quantum parameter file:
 *   "QUGAQPV1"                       8-byte magic
 *   family, embedding_axis           AnsatzFamily / EmbeddingAxis values
 *   layers, n_qubits
 *   param_count, params[param_count]
 */

void save_mlp(const std::filesystem::path &path, const Mlp &model);
[[nodiscard]] Mlp load_mlp(const std::filesystem::path &path);

struct QuantumCheckpoint {
    AnsatzSpec spec;
    EmbeddingAxis axis = EmbeddingAxis::RY;
    std::vector<double> params;
};

void save_quantum_params(const std::filesystem::path &path,
                         const QuantumCheckpoint &checkpoint);
[[nodiscard]] QuantumCheckpoint load_quantum_params(const std::filesystem::path &path);

}  // namespace quga
