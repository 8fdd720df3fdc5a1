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

namespace quga {

/// Discriminator outputs are clamped into [eps, 1 - eps] before the log.
inline constexpr double kBceClamp = 1e-7;

[[nodiscard]] double clamp_probability(double d) noexcept;

/// -(y log d + (1 - y) log(1 - d)) on the clamped d.
[[nodiscard]] double bce_loss(double d, double y) noexcept;

/// d BCE / d d = (d - y) / (d (1 - d)), evaluated at the clamped d.
[[nodiscard]] double bce_grad(double d, double y) noexcept;

}  // namespace quga
