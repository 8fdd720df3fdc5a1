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
#include <vector>

namespace quga {

struct AdamConfig {
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

/// Adam with bias-corrected moments over one flat parameter vector.
class Adam {
  public:
    Adam(std::size_t n_params, AdamConfig config);

    /// Throws ArgumentError if params/grads do not match the state length.
    void step(std::span<double> params, std::span<const double> grads);

    [[nodiscard]] const AdamConfig &config() const noexcept { return config_; }
    [[nodiscard]] std::uint64_t t() const noexcept { return t_; }
    [[nodiscard]] std::span<const double> m() const noexcept { return m_; }
    [[nodiscard]] std::span<const double> v() const noexcept { return v_; }

  private:
    AdamConfig config_;
    std::vector<double> m_;
    std::vector<double> v_;
    std::uint64_t t_ = 0;
};

}  // namespace quga
