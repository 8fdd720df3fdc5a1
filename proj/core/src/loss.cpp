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

#include "quga/loss.hpp"

#include <algorithm>
#include <cmath>

namespace quga {

double clamp_probability(double d) noexcept {
    return std::clamp(d, kBceClamp, 1.0 - kBceClamp);
}

double bce_loss(double d, double y) noexcept {
    const double p = clamp_probability(d);
    return -(y * std::log(p) + (1.0 - y) * std::log1p(-p));
}

double bce_grad(double d, double y) noexcept {
    const double p = clamp_probability(d);
    return (p - y) / (p * (1.0 - p));
}

}  // namespace quga
