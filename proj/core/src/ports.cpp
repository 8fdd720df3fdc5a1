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

#include "quga/ports.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <unordered_set>

#include "quga/errors.hpp"
#include "quga/io.hpp"

namespace quga {

void validate_port(const Port &port) {
    if (!(port.lat_deg >= -90.0 && port.lat_deg <= 90.0)) {
        throw ValidationError("port " + std::to_string(port.id) +
                              ": latitude out of range [-90, 90]");
    }
    if (!(port.lon_deg > -180.0 && port.lon_deg <= 180.0)) {
        throw ValidationError("port " + std::to_string(port.id) +
                              ": longitude out of range (-180, 180]");
    }
}

std::vector<Port> load_ports(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open port list " + path.string());

    std::vector<Port> ports;
    std::unordered_set<std::int64_t> seen;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        io::strip_cr(line);
        if (line.empty() || line.front() == '#') continue;
        const auto fields = io::split_csv(line);
        const auto where = path.string() + ":" + std::to_string(line_no);
        if (!header_seen) {
            if (fields != std::vector<std::string>{"id", "name", "lat_deg", "lon_deg"}) {
                throw ParseError(where + ": expected header id,name,lat_deg,lon_deg");
            }
            header_seen = true;
            continue;
        }
        if (fields.size() != 4) {
            throw ParseError(where + ": expected 4 fields, got " +
                             std::to_string(fields.size()));
        }
        Port p;
        p.id = io::parse_int(fields[0], where);
        p.name = fields[1];
        p.lat_deg = io::parse_double(fields[2], where);
        p.lon_deg = io::parse_double(fields[3], where);
        try {
            validate_port(p);
        } catch (const ValidationError &e) {
            throw ValidationError(where + ": " + e.what());
        }
        if (!seen.insert(p.id).second) {
            throw ValidationError(where + ": duplicate port id " + std::to_string(p.id));
        }
        ports.push_back(std::move(p));
    }
    if (!header_seen) throw ParseError(path.string() + ": empty port list");
    return ports;
}

double great_circle_nm(const Port &a, const Port &b) noexcept {
    constexpr double kDeg = std::numbers::pi / 180.0;
    const double phi1 = a.lat_deg * kDeg;
    const double phi2 = b.lat_deg * kDeg;
    const double dphi = (b.lat_deg - a.lat_deg) * kDeg;
    const double dlambda = (b.lon_deg - a.lon_deg) * kDeg;
    const double s1 = std::sin(dphi / 2);
    const double s2 = std::sin(dlambda / 2);
    const double h = std::clamp(s1 * s1 + std::cos(phi1) * std::cos(phi2) * s2 * s2, 0.0, 1.0);
    return 2.0 * kEarthRadiusNm * std::asin(std::sqrt(h));
}

}  // namespace quga
