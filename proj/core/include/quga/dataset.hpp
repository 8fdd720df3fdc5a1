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

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quga/graph.hpp"
#include "quga/ports.hpp"

namespace quga {

inline constexpr double kDefaultMinDistanceNm = 100.0;
inline constexpr std::size_t kMaxConsecutiveRejections = 10'000;

/// One accepted quadruple: normalized weights plus the raw distances (nmi)
/// and the indices of the drawn ports in node order.
struct SampledGraph {
    GraphSample sample;
    EdgeWeights raw_nm{};
    std::array<std::size_t, kNodes> port_index{};
};

/// Draws 4 distinct ports uniformly; the whole quadruple is redrawn when any
/// pair is closer than `threshold_nm`. Throws InfeasibleError after
/// 10,000 consecutive rejections and ArgumentError for fewer than 4 ports.
[[nodiscard]] SampledGraph sample_graph(std::mt19937_64 &rng, std::span<const Port> ports,
                                        double threshold_nm = kDefaultMinDistanceNm);

struct Provenance {
    std::string source;          ///< port list path as given
    std::string port_list_hash;  ///< FNV-1a of the port list file bytes
    std::uint64_t seed = 0;
    double threshold_nm = kDefaultMinDistanceNm;
    double earth_radius_nm = kEarthRadiusNm;
    std::string config_hash;
};

struct Dataset {
    std::vector<GraphSample> samples;
    /// Raw distances of each sample; only populated by build_dataset.
    std::vector<EdgeWeights> raw_nm;
    std::optional<Provenance> provenance;
};

/// Deterministic in (n, seed, ports, threshold_nm).
[[nodiscard]] Dataset build_dataset(std::size_t n, std::uint64_t seed,
                                    std::span<const Port> ports,
                                    double threshold_nm = kDefaultMinDistanceNm);

/// Sidecar path for a dataset CSV: same stem, `.json` extension.
[[nodiscard]] std::filesystem::path sidecar_path(const std::filesystem::path &csv);

/// Renders the dataset CSV (header graph_id,w01,w02,w03,w12,w13,w23).
[[nodiscard]] std::string dataset_csv(const Dataset &dataset);

/// Writes the CSV and, when provenance is present, the JSON sidecar.
void save_dataset(const std::filesystem::path &path, const Dataset &dataset);

using WarningSink = std::function<void(std::string_view)>;

/// Loads and validates every sample; throws CorruptDatasetError on any
/// invariant violation. A missing sidecar is reported through `warn`.
[[nodiscard]] Dataset load_dataset(const std::filesystem::path &path,
                                   const WarningSink &warn = {});

}  // namespace quga
