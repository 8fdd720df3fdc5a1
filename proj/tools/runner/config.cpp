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

#include "config.hpp"

#include <sstream>

#include "quga/errors.hpp"
#include "quga/io.hpp"
#include "quga/loss.hpp"

namespace quga::cli {

using nlohmann::json;

json default_config_json() {
    return json{
        {"data",
         {{"ports", "data/ports.csv"},
          {"dataset", "data/dataset.csv"},
          {"n_graphs", 1000},
          {"seed", 2024},
          {"min_distance_nm", 100.0}}},
        {"model",
         {{"name", "qugan36"},
          {"embedding_axis", "ry"},
          {"quantum_gradient", "adjoint"},
          {"output_bias_init", kClassicalOutputBiasInit}}},
        {"train",
         {{"epochs", 200},
          {"batch_size", 32},
          {"lr_disc", 0.3},
          {"lr_gen", 0.001},
          {"seeds", {1, 2, 3}},
          {"beta1", 0.9},
          {"beta2", 0.999},
          {"epsilon", 1e-8},
          {"leaky_slope", kDefaultLeakySlope}}},
        {"eval", {{"eval_samples", 1000}, {"eval_every", 10}, {"histogram_bins", 40}}},
        {"baseline", {{"n_samples", 1000}, {"seed", 11}, {"renormalize", true}}},
    };
}

void apply_override(json &config, const std::string &assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ConfigError("override '" + assignment + "' is not of the form key.path=value");
    }
    const std::string key = assignment.substr(0, eq);
    const std::string text = assignment.substr(eq + 1);
    json value = json::parse(text, nullptr, false);
    if (value.is_discarded()) value = text;

    json *node = &config;
    std::istringstream parts(key);
    std::string part;
    std::vector<std::string> path;
    while (std::getline(parts, part, '.')) path.push_back(part);
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (!node->is_object() || !node->contains(path[i])) {
            throw ConfigError("unknown config key '" + key + "'");
        }
        node = &(*node)[path[i]];
    }
    *node = std::move(value);
}

namespace {

// Defaults overlaid by the user file, two levels deep; unknown keys rejected.
void merge_checked(json &base, const json &user, const std::string &where) {
    if (!user.is_object()) throw ConfigError(where + ": config must be a JSON object");
    for (const auto &[section, body] : user.items()) {
        if (!base.contains(section)) throw ConfigError(where + ": unknown section '" + section + "'");
        if (!body.is_object()) throw ConfigError(where + ": section '" + section + "' must be an object");
        for (const auto &[key, value] : body.items()) {
            if (!base[section].contains(key)) {
                throw ConfigError(where + ": unknown key '" + section + "." + key + "'");
            }
            base[section][key] = value;
        }
    }
}

template <typename T>
T get(const json &j, const char *section, const char *key) {
    try {
        return j.at(section).at(key).get<T>();
    } catch (const json::exception &) {
        throw ConfigError(std::string("config key ") + section + "." + key + " has the wrong type");
    }
}

std::size_t get_count(const json &j, const char *section, const char *key, std::size_t min) {
    const auto &v = j.at(section).at(key);
    if (!v.is_number_integer() || v.get<std::int64_t>() < static_cast<std::int64_t>(min)) {
        throw ConfigError(std::string(section) + "." + key + " must be an integer >= " +
                          std::to_string(min));
    }
    return v.get<std::size_t>();
}

std::filesystem::path resolve(const std::filesystem::path &base, const std::string &p) {
    const std::filesystem::path path(p);
    return path.is_absolute() || base.empty() ? path : (base / path).lexically_normal();
}

std::string model_list() {
    std::string out;
    for (const auto &n : model_names()) out += (out.empty() ? "" : ", ") + n;
    return out;
}

}  // namespace

RunConfig load_config(const std::optional<std::filesystem::path> &path,
                      const std::vector<std::string> &overrides) {
    json merged = default_config_json();
    std::filesystem::path base;
    if (path) {
        json user;
        try {
            user = json::parse(io::read_file(*path));
        } catch (const json::exception &e) {
            throw ConfigError(path->string() + ": " + e.what());
        } catch (const ParseError &e) {
            throw ConfigError(e.what());
        }
        merge_checked(merged, user, path->string());
        base = path->parent_path();
    }
    for (const auto &o : overrides) apply_override(merged, o);

    RunConfig c;
    c.data.ports = resolve(base, get<std::string>(merged, "data", "ports"));
    c.data.dataset = resolve(base, get<std::string>(merged, "data", "dataset"));
    c.data.n_graphs = get_count(merged, "data", "n_graphs", 1);
    c.data.seed = get<std::uint64_t>(merged, "data", "seed");
    c.data.min_distance_nm = get<double>(merged, "data", "min_distance_nm");
    if (!(c.data.min_distance_nm >= 0.0)) throw ConfigError("data.min_distance_nm must be >= 0");

    c.model.name = get<std::string>(merged, "model", "name");
    const auto gen = generator_config_for(c.model.name);
    if (!gen) {
        throw ConfigError("unknown model '" + c.model.name + "'; valid models: " + model_list());
    }
    c.model.generator = *gen;
    const auto axis = get<std::string>(merged, "model", "embedding_axis");
    if (axis == "ry") {
        c.model.generator.embedding = EmbeddingAxis::RY;
    } else if (axis == "rx") {
        c.model.generator.embedding = EmbeddingAxis::RX;
    } else {
        throw ConfigError("model.embedding_axis must be \"ry\" or \"rx\"");
    }
    const auto grad = get<std::string>(merged, "model", "quantum_gradient");
    if (grad == "adjoint") {
        c.model.generator.gradient = QuantumGradient::Adjoint;
    } else if (grad == "parameter_shift") {
        c.model.generator.gradient = QuantumGradient::ParameterShift;
    } else {
        throw ConfigError("model.quantum_gradient must be \"adjoint\" or \"parameter_shift\"");
    }
    c.model.generator.output_bias_init = get<double>(merged, "model", "output_bias_init");

    auto &t = c.train;
    t.epochs = get_count(merged, "train", "epochs", 0);
    t.batch_size = get_count(merged, "train", "batch_size", 1);
    t.lr_disc = get<double>(merged, "train", "lr_disc");
    t.lr_gen = get<double>(merged, "train", "lr_gen");
    t.seeds = get<std::vector<std::uint64_t>>(merged, "train", "seeds");
    t.beta1 = get<double>(merged, "train", "beta1");
    t.beta2 = get<double>(merged, "train", "beta2");
    t.epsilon = get<double>(merged, "train", "epsilon");
    t.leaky_slope = get<double>(merged, "train", "leaky_slope");
    t.eval_samples = get_count(merged, "eval", "eval_samples", 1);
    t.eval_every = get_count(merged, "eval", "eval_every", 1);
    t.validate();
    c.model.generator.leaky_slope = t.leaky_slope;

    c.eval.histogram_bins = get_count(merged, "eval", "histogram_bins", 2);
    c.baseline.n_samples = get_count(merged, "baseline", "n_samples", 1);
    c.baseline.seed = get<std::uint64_t>(merged, "baseline", "seed");
    c.baseline.renormalize = get<bool>(merged, "baseline", "renormalize");

    c.resolved = std::move(merged);
    c.hash = io::fnv1a_hex(c.resolved.dump());
    return c;
}

std::string provenance_tag(const RunConfig &config) {
    std::string seeds;
    for (auto s : config.train.seeds) seeds += (seeds.empty() ? "" : ";") + std::to_string(s);
    return "config_hash=" + config.hash + " seeds=" + seeds;
}

json design_decisions_json(const RunConfig &c) {
    const auto &g = c.model.generator;
    return json{
        {"embedding_axis", std::string(to_string(g.embedding))},
        {"rotation_block_order", "rx ladder, then y/ry ladder"},
        {"final_rotation_block", true},
        {"entanglement", "circular cnot ring i -> i+1 mod n"},
        {"bit_order", "qubit 0 = least significant bit"},
        {"quantum_gradient", g.gradient == QuantumGradient::Adjoint ? "adjoint" : "parameter_shift"},
        {"quantum_param_init", "uniform[-pi, pi]"},
        {"classical_weight_init", "uniform[-sqrt(1/fan_in), +sqrt(1/fan_in)], biases 0"},
        {"classical_output_bias_init", g.output_bias_init},
        {"leaky_relu_slope", c.train.leaky_slope},
        {"adam", {{"beta1", c.train.beta1}, {"beta2", c.train.beta2}, {"epsilon", c.train.epsilon}}},
        {"bce_clamp", kBceClamp},
        {"generator_objective", "non-saturating bce, fake label 1"},
        {"update_schedule", "one discriminator step then one generator step per batch"},
        {"discriminator_batches", "separate real and generated passes, mean over 2B"},
        {"renormalization_in_gradient", true},
        {"degenerate_output_rule", "all-zero raw output -> uniform 1/6, zero gradient"},
        {"eval_samples", c.train.eval_samples},
        {"eval_every", c.train.eval_every},
        {"eval_stream", "mt19937_64 seeded from (seed, epoch)"},
        {"last_partial_batch", "kept"},
    };
}

}  // namespace quga::cli
