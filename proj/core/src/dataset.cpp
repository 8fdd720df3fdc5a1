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

#include "quga/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "quga/errors.hpp"
#include "quga/io.hpp"

namespace quga {
namespace {

constexpr std::string_view kHeader = "graph_id,w01,w02,w03,w12,w13,w23";

std::array<std::size_t, kNodes> draw_distinct(std::mt19937_64 &rng, std::size_t n) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::array<std::size_t, kNodes> idx{};
    for (std::size_t k = 0; k < kNodes; ++k) {
        std::size_t candidate = 0;
        do {
            candidate = pick(rng);
        } while (std::find(idx.begin(), idx.begin() + k, candidate) != idx.begin() + k);
        idx[k] = candidate;
    }
    return idx;
}

}  // namespace

SampledGraph sample_graph(std::mt19937_64 &rng, std::span<const Port> ports,
                          double threshold_nm) {
    if (ports.size() < kNodes) {
        throw ArgumentError("need at least 4 ports to sample a graph, got " +
                            std::to_string(ports.size()));
    }
    for (std::size_t attempt = 0; attempt < kMaxConsecutiveRejections; ++attempt) {
        SampledGraph g;
        g.port_index = draw_distinct(rng, ports.size());
        bool accepted = true;
        for (std::size_t e = 0; e < kEdges; ++e) {
            const auto [a, b] = kEdgePairs[e];
            g.raw_nm[e] = great_circle_nm(ports[g.port_index[a]], ports[g.port_index[b]]);
            if (g.raw_nm[e] < threshold_nm) {
                accepted = false;
                break;
            }
        }
        if (!accepted) continue;
        g.sample = normalize_edges(g.raw_nm);
        return g;
    }
    throw InfeasibleError("no admissible port quadruple after " +
                          std::to_string(kMaxConsecutiveRejections) +
                          " consecutive draws; port list too clustered for a " +
                          io::format_double(threshold_nm) + " nmi threshold");
}

Dataset build_dataset(std::size_t n, std::uint64_t seed, std::span<const Port> ports,
                      double threshold_nm) {
    if (n < 1) throw ArgumentError("dataset size must be at least 1");
    std::mt19937_64 rng(seed);
    Dataset ds;
    ds.samples.reserve(n);
    ds.raw_nm.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto g = sample_graph(rng, ports, threshold_nm);
        ds.samples.push_back(g.sample);
        ds.raw_nm.push_back(g.raw_nm);
    }
    Provenance prov;
    prov.seed = seed;
    prov.threshold_nm = threshold_nm;
    ds.provenance = prov;
    return ds;
}

std::filesystem::path sidecar_path(const std::filesystem::path &csv) {
    auto p = csv;
    p.replace_extension(".json");
    return p;
}

std::string dataset_csv(const Dataset &dataset) {
    std::ostringstream out;
    out << kHeader << '\n';
    for (std::size_t i = 0; i < dataset.samples.size(); ++i) {
        out << i;
        for (double w : dataset.samples[i].weights) out << ',' << io::format_double(w);
        out << '\n';
    }
    return out.str();
}

void save_dataset(const std::filesystem::path &path, const Dataset &dataset) {
    io::write_file_atomic(path, dataset_csv(dataset));
    if (!dataset.provenance) return;
    const auto &p = *dataset.provenance;
    nlohmann::json j = {
        {"n_graphs", dataset.samples.size()},
        {"seed", p.seed},
        {"source", p.source},
        {"port_list_hash", p.port_list_hash},
        {"threshold_nm", p.threshold_nm},
        {"earth_radius_nm", p.earth_radius_nm},
        {"distance", "great_circle_haversine"},
        {"edge_order", "01,02,03,12,13,23"},
        {"config_hash", p.config_hash},
    };
    io::write_file_atomic(sidecar_path(path), j.dump(2) + "\n");
}

Dataset load_dataset(const std::filesystem::path &path, const WarningSink &warn) {
    std::ifstream in(path);
    if (!in) throw CorruptDatasetError("cannot open dataset " + path.string());
    Dataset ds;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        io::strip_cr(line);
        if (line.empty() || line.front() == '#') continue;
        const auto where = path.string() + ":" + std::to_string(line_no);
        if (!header_seen) {
            if (line != kHeader) {
                throw CorruptDatasetError(where + ": expected header " + std::string(kHeader));
            }
            header_seen = true;
            continue;
        }
        const auto fields = io::split_csv(line);
        if (fields.size() != kEdges + 1) {
            throw CorruptDatasetError(where + ": expected 7 fields");
        }
        GraphSample g;
        try {
            const auto id = io::parse_int(fields[0], where);
            if (id != static_cast<std::int64_t>(ds.samples.size())) {
                throw CorruptDatasetError(where + ": graph ids must be sequential from 0");
            }
            for (std::size_t e = 0; e < kEdges; ++e) {
                g.weights[e] = io::parse_double(fields[e + 1], where);
            }
        } catch (const ParseError &err) {
            throw CorruptDatasetError(err.what());
        }
        if (!satisfies_sample_contract(g)) {
            throw CorruptDatasetError(where +
                                      ": weights must be nonnegative and sum to 1 within 1e-9");
        }
        ds.samples.push_back(g);
    }
    if (!header_seen) throw CorruptDatasetError(path.string() + ": empty dataset file");

    const auto side = sidecar_path(path);
    if (!std::filesystem::exists(side)) {
        const std::string msg = "dataset sidecar " + side.string() + " is missing; provenance unknown";
        if (warn) {
            warn(msg);
        } else {
            std::cerr << "warning: " << msg << '\n';
        }
        return ds;
    }
    try {
        const auto j = nlohmann::json::parse(io::read_file(side));
        Provenance p;
        p.seed = j.at("seed").get<std::uint64_t>();
        p.threshold_nm = j.at("threshold_nm").get<double>();
        p.source = j.value("source", "");
        p.port_list_hash = j.value("port_list_hash", "");
        p.earth_radius_nm = j.value("earth_radius_nm", kEarthRadiusNm);
        p.config_hash = j.value("config_hash", "");
        if (j.contains("n_graphs") && j["n_graphs"].get<std::size_t>() != ds.samples.size()) {
            throw CorruptDatasetError(side.string() + ": n_graphs disagrees with the CSV");
        }
        ds.provenance = p;
    } catch (const nlohmann::json::exception &e) {
        throw CorruptDatasetError(side.string() + ": " + e.what());
    }
    return ds;
}

}  // namespace quga
