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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace quga {

struct Port {
    std::int64_t id = 0;
    std::string name;
    double lat_deg = 0.0;  ///< [-90, 90]
    double lon_deg = 0.0;  ///< (-180, 180]
};

/// Mean Earth radius in nautical miles.
inline constexpr double kEarthRadiusNm = 3440.065;

/// Reads a CSV with header `id,name,lat_deg,lon_deg`. Throws ParseError
/// (with line number) on malformed rows and ValidationError on
/// out-of-range coordinates or duplicate ids.
[[nodiscard]] std::vector<Port> load_ports(const std::filesystem::path &path);

/// Throws ValidationError if a port's coordinates are out of range.
void validate_port(const Port &port);

/// Haversine distance in nautical miles.
[[nodiscard]] double great_circle_nm(const Port &a, const Port &b) noexcept;

}  // namespace quga
