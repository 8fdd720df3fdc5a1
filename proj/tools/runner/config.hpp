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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "quga/generator.hpp"
#include "quga/trainer.hpp"

namespace quga::cli {

struct DataSection {
    std::filesystem::path ports;
    std::filesystem::path dataset;
    std::size_t n_graphs = 1000;
    std::uint64_t seed = 2024;
    double min_distance_nm = 100.0;
};

struct ModelSection {
    std::string name = "qugan36";
    GeneratorConfig generator;
};

struct EvalSection {
    std::size_t histogram_bins = 40;
};

struct BaselineSection {
    std::size_t n_samples = 1000;
    std::uint64_t seed = 11;
    bool renormalize = true;
};

/**
 * Fully resolved experiment configuration. Sections: data, model, train,
 * eval, baseline. Relative paths resolve against the config file's
 * directory (or the working directory for the built-in defaults).
 */
struct RunConfig {
    DataSection data;
    ModelSection model;
    TrainConfig train;
    EvalSection eval;
    BaselineSection baseline;

    nlohmann::json resolved;  ///< the merged JSON the fields were read from
    std::string hash;         ///< FNV-1a of resolved.dump()
};

/// Built-in defaults; identical to configs/desk.json apart from path roots.
[[nodiscard]] nlohmann::json default_config_json();

/// Applies `key.path=value` overrides; values parse as JSON when possible and
/// fall back to plain strings. Throws ConfigError on unknown keys.
void apply_override(nlohmann::json &config, const std::string &assignment);

/**
 * Loads (or defaults), merges overrides, then validates every field before
 * returning. Throws ConfigError on any problem; nothing is written.
 */
[[nodiscard]] RunConfig load_config(const std::optional<std::filesystem::path> &path,
                                    const std::vector<std::string> &overrides);

/// "config_hash=<hash> seeds=<s1;s2;...>" for output headers.
[[nodiscard]] std::string provenance_tag(const RunConfig &config);

[[nodiscard]] nlohmann::json design_decisions_json(const RunConfig &config);

}  // namespace quga::cli
