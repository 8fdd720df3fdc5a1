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

#include "quga/statevector.hpp"

#include <cmath>
#include <string>

#include "quga/errors.hpp"

namespace quga {

Statevector::Statevector(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw ConfigError("qubit count must be in [1, 12], got " +
                          std::to_string(n_qubits));
    }
    amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

void Statevector::check_qubit(std::size_t qubit) const {
    if (qubit >= n_qubits_) {
        throw IndexError("qubit " + std::to_string(qubit) +
                         " out of range for " + std::to_string(n_qubits_) +
                         "-qubit register");
    }
}

void Statevector::apply_1q(std::size_t qubit, Complex m00, Complex m01,
                           Complex m10, Complex m11) {
    check_qubit(qubit);
    const std::size_t stride = std::size_t{1} << qubit;
    const std::size_t n = amps_.size();
    // Iterate over index pairs (i0, i0 | stride) with the target bit clear.
    for (std::size_t block = 0; block < n; block += 2 * stride) {
        for (std::size_t off = 0; off < stride; ++off) {
            const std::size_t i0 = block + off;
            const std::size_t i1 = i0 + stride;
            const Complex a0 = amps_[i0];
            const Complex a1 = amps_[i1];
            amps_[i0] = m00 * a0 + m01 * a1;
            amps_[i1] = m10 * a0 + m11 * a1;
        }
    }
}

void Statevector::apply_rx(std::size_t qubit, double theta) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    apply_1q(qubit, {c, 0}, {0, -s}, {0, -s}, {c, 0});
}

void Statevector::apply_ry(std::size_t qubit, double theta) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    apply_1q(qubit, {c, 0}, {-s, 0}, {s, 0}, {c, 0});
}

void Statevector::apply_pauli_y(std::size_t qubit) {
    apply_1q(qubit, {0, 0}, {0, -1}, {0, 1}, {0, 0});
}

void Statevector::apply_cnot(std::size_t control, std::size_t target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw ArgumentError("CNOT control and target must differ");
    }
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tmask = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        // Visit each swapped pair once, from the member with target bit 0.
        if ((i & cmask) && !(i & tmask)) {
            std::swap(amps_[i], amps_[i | tmask]);
        }
    }
}

double Statevector::norm_squared() const noexcept {
    double acc = 0.0;
    for (const auto &a : amps_) acc += std::norm(a);
    return acc;
}

std::vector<double> Statevector::marginals_zero() const {
    std::vector<double> probs(n_qubits_, 0.0);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        const double p = std::norm(amps_[i]);
        for (std::size_t q = 0; q < n_qubits_; ++q) {
            if (!((i >> q) & 1U)) probs[q] += p;
        }
    }
    return probs;
}

Complex inner(const Statevector &a, const Statevector &b) {
    if (a.dim() != b.dim()) {
        throw ArgumentError("inner product of states with different widths");
    }
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.amps_.size(); ++i) {
        acc += std::conj(a.amps_[i]) * b.amps_[i];
    }
    return acc;
}

}  // namespace quga
