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

#include <stdexcept>
#include <string>

namespace quga {

/// Invalid configuration value (qubit count, hyperparameter, config file).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shape or argument mismatch at an API boundary.
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Wire or element index out of range.
struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Malformed input file. The message carries the offending line number.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input parsed but violates a domain invariant.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Rejection sampling gave up: port list is too clustered for the threshold.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerically degenerate input (zero-sum edges, zero-variance KDE support).
struct DegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Persisted dataset failed invariant checks on load.
struct CorruptDatasetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace quga
