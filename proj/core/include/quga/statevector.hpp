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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace quga {

using Complex = std::complex<double>;

/**
 * Dense noiseless statevector of an n-qubit register.
 *
 * Basis index bit k holds qubit k, so qubit 0 is the least significant bit:
 * |q1 q0> = |10> is index 1 only when q0 = 1, i.e. |x> with x = sum q_k 2^k.
 * Gates mutate the state in place.
 */
class Statevector {
  public:
    static constexpr std::size_t kMaxQubits = 12;

    /// Ground state |0...0>. Throws ConfigError unless 1 <= n_qubits <= 12.
    explicit Statevector(std::size_t n_qubits);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amps_; }

    void apply_rx(std::size_t qubit, double theta);
    void apply_ry(std::size_t qubit, double theta);
    void apply_pauli_y(std::size_t qubit);
    void apply_cnot(std::size_t control, std::size_t target);

    /// Generic single-qubit unitary [[m00, m01], [m10, m11]].
    void apply_1q(std::size_t qubit, Complex m00, Complex m01, Complex m10,
                  Complex m11);

    /// Squared-magnitude sum of all amplitudes.
    [[nodiscard]] double norm_squared() const noexcept;

    /// Probability of reading |0> on each wire.
    [[nodiscard]] std::vector<double> marginals_zero() const;

    /// <a|b> over two states of equal width.
    [[nodiscard]] friend Complex inner(const Statevector &a,
                                       const Statevector &b);

  private:
    void check_qubit(std::size_t qubit) const;

    std::size_t n_qubits_;
    std::vector<Complex> amps_;
};

Complex inner(const Statevector &a, const Statevector &b);

}  // namespace quga
