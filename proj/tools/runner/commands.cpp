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

#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "quga/checkpoint.hpp"
#include "quga/dataset.hpp"
#include "quga/errors.hpp"
#include "quga/evaluation.hpp"
#include "quga/io.hpp"
#include "quga/kde.hpp"
#include "quga/ports.hpp"

namespace quga::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string samples_csv(std::span<const GraphSample> samples, const std::string &comment) {
    Dataset d;
    d.samples.assign(samples.begin(), samples.end());
    return "# " + comment + "\n" + dataset_csv(d);
}

std::vector<GraphSample> load_samples(const fs::path &path) {
    return load_dataset(path, [](std::string_view) {}).samples;
}

Dataset load_training_data(const fs::path &path) {
    return load_dataset(path, [](std::string_view msg) { std::cerr << "warning: " << msg << '\n'; });
}

std::vector<MetricsRecord> parse_metrics_csv(const fs::path &path) {
    std::ifstream in(path);
    if (!in) throw ParseError("missing metrics file " + path.string());
    std::vector<MetricsRecord> records;
    std::string line;
    std::size_t line_no = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        io::strip_cr(line);
        if (line.empty() || line.front() == '#') continue;
        const auto where = path.string() + ":" + std::to_string(line_no);
        if (!header) {
            if (line != "seed,epoch,valid_count,weight_std,gen_loss,disc_loss") {
                throw ParseError(where + ": unexpected metrics header");
            }
            header = true;
            continue;
        }
        const auto f = io::split_csv(line);
        if (f.size() != 6) throw ParseError(where + ": expected 6 fields");
        MetricsRecord r;
        r.seed = static_cast<std::uint64_t>(io::parse_int(f[0], where));
        r.epoch = static_cast<std::size_t>(io::parse_int(f[1], where));
        r.valid_count = static_cast<std::size_t>(io::parse_int(f[2], where));
        r.weight_std = io::parse_double(f[3], where);
        r.gen_loss = io::parse_double(f[4], where);
        r.disc_loss = io::parse_double(f[5], where);
        records.push_back(r);
    }
    if (!header) throw ParseError(path.string() + ": empty metrics file");
    return records;
}

std::string seed_file(const char *prefix, std::uint64_t seed, const char *ext) {
    return std::string(prefix) + std::to_string(seed) + ext;
}

}  // namespace

std::size_t thread_budget(std::size_t fallback) {
    if (const char *env = std::getenv("QUGA_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return std::min(fallback, static_cast<std::size_t>(v));
        } catch (const std::exception &) {
        }
        throw ConfigError("QUGA_THREADS must be a positive integer");
    }
    return fallback;
}

void cmd_gen_data(const RunConfig &config, const fs::path &out, std::ostream &log) {
    const auto ports = load_ports(config.data.ports);
    auto dataset = build_dataset(config.data.n_graphs, config.data.seed, ports,
                                 config.data.min_distance_nm);
    auto &prov = *dataset.provenance;
    prov.source = config.data.ports.filename().string();
    prov.port_list_hash = io::fnv1a_hex(io::read_file(config.data.ports));
    prov.config_hash = config.hash;

    // The metric property survives normalization; check it on every sample.
    const std::size_t valid = valid_count(dataset.samples);
    if (valid != dataset.samples.size()) {
        throw ValidationError("generated dataset contains triangle violations");
    }

    const fs::path target = out.empty() ? config.data.dataset : out / "dataset.csv";
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    save_dataset(target, dataset);

    log << "wrote " << target.string() << '\n'
        << "  samples          " << dataset.samples.size() << '\n'
        << "  pooled weight sd " << io::format_double(pooled_weight_std(dataset.samples)) << '\n'
        << "  triangle valid   " << valid << '/' << dataset.samples.size() << " (100%)\n"
        << "  ports            " << ports.size() << " from " << config.data.ports.string() << '\n';
}

void cmd_train(const RunConfig &config, const fs::path &out, std::size_t threads,
               std::ostream &log) {
    const auto dataset = load_training_data(config.data.dataset);
    if (dataset.samples.empty()) throw CorruptDatasetError("training dataset is empty");

    const std::size_t expected = expected_param_count(config.model.name);
    {
        Generator probe(config.model.generator);
        if (probe.param_count() != expected) {
            throw std::logic_error("model " + config.model.name + " has " +
                                   std::to_string(probe.param_count()) +
                                   " parameters, expected " + std::to_string(expected));
        }
    }
    const std::size_t disc_params = build_discriminator().param_count();
    log << "model " << config.model.name << ": generator " << expected
        << " parameters, discriminator " << disc_params << " parameters\n";

    const auto result = train(config.train, config.model.generator, dataset.samples, threads);

    fs::create_directories(out / "checkpoints");
    const std::string tag = provenance_tag(config) + " model=" + config.model.name;
    std::size_t degenerate = 0;
    for (const auto &run : result.runs) {
        io::write_file_atomic(out / seed_file("metrics_seed_", run.seed, ".csv"),
                              metrics_csv(run.records, tag));
        io::write_file_atomic(out / seed_file("samples_seed_", run.seed, ".csv"),
                              samples_csv(run.final_samples, tag + " epoch=" +
                                                                 std::to_string(run.records.back().epoch)));
        save_mlp(out / "checkpoints" / seed_file("disc_seed_", run.seed, ".bin"),
                 run.state.discriminator);
        const auto &gen = run.state.generator;
        const auto gen_path = out / "checkpoints" / seed_file("gen_seed_", run.seed, ".bin");
        if (gen.config().kind == GeneratorKind::Classical) {
            save_mlp(gen_path, gen.mlp());
        } else {
            save_quantum_params(gen_path, {gen.config().ansatz, gen.config().embedding,
                                           {gen.params().begin(), gen.params().end()}});
        }
        degenerate += run.state.degenerate_outputs;
    }
    io::write_file_atomic(out / "metrics_mean.csv", mean_metrics_csv(result.mean, tag));

    json meta = {
        {"model", config.model.name},
        {"generator_params", expected},
        {"discriminator_params", disc_params},
        {"seeds", config.train.seeds},
        {"epochs", config.train.epochs},
        {"eval_samples", config.train.eval_samples},
        {"eval_every", config.train.eval_every},
        {"dataset", fs::absolute(config.data.dataset).lexically_normal().string()},
        {"config_hash", config.hash},
        {"config", config.resolved},
        {"design_decisions", design_decisions_json(config)},
        {"degenerate_outputs", degenerate},
    };
    io::write_file_atomic(out / "run.json", meta.dump(2) + "\n");

    const auto &last = result.mean.back();
    log << "wrote " << out.string() << '\n'
        << "  final epoch " << last.epoch << ": mean valid "
        << io::format_double(last.valid_count) << '/' << config.train.eval_samples
        << ", weight sd " << io::format_double(last.weight_std) << ", gen loss "
        << io::format_double(last.gen_loss) << '\n';
    if (degenerate > 0) {
        log << "  note: " << degenerate << " all-zero generator outputs replaced by uniform weights\n";
    }
}

void cmd_baseline(const RunConfig &config, const fs::path &out, std::ostream &log) {
    const auto dataset = load_training_data(config.data.dataset);
    const auto model = kde_fit(dataset.samples);
    std::mt19937_64 rng(config.baseline.seed);
    std::vector<GraphSample> samples;
    samples.reserve(config.baseline.n_samples);
    for (std::size_t i = 0; i < config.baseline.n_samples; ++i) {
        samples.push_back(kde_sample_graph(model, rng, config.baseline.renormalize));
    }
    const double fraction = valid_fraction(samples);

    fs::create_directories(out);
    json summary = {
        {"n_samples", samples.size()},
        {"valid_fraction", fraction},
        {"bandwidth", model.bandwidth},
        {"bandwidth_rule", "scott"},
        {"seed", config.baseline.seed},
        {"renormalize", config.baseline.renormalize},
        {"dataset", fs::absolute(config.data.dataset).lexically_normal().string()},
        {"config_hash", config.hash},
    };
    io::write_file_atomic(out / "baseline.json", summary.dump(2) + "\n");
    std::string body = "# config_hash=" + config.hash +
                       " seed=" + std::to_string(config.baseline.seed) + "\n";
    body += "graph_id,w01,w02,w03,w12,w13,w23\n";
    for (std::size_t i = 0; i < samples.size(); ++i) {
        body += std::to_string(i);
        for (double w : samples[i].weights) body += "," + io::format_double(w);
        body += "\n";
    }
    io::write_file_atomic(out / "baseline_samples.csv", body);

    log << "wrote " << (out / "baseline.json").string() << '\n'
        << "  KDE bandwidth  " << io::format_double(model.bandwidth) << '\n'
        << "  valid fraction " << io::format_double(fraction) << " over " << samples.size()
        << " draws\n";
}

namespace {

struct LoadedRun {
    std::string label;
    std::string dataset;
    std::string config_hash;
    std::size_t eval_samples = 0;
    std::vector<std::uint64_t> seeds;
    std::vector<MeanRecord> mean;
    std::vector<double> final_weights;
};

LoadedRun load_run(const fs::path &dir) {
    const auto meta_path = dir / "run.json";
    if (!fs::exists(meta_path)) throw ParseError("run " + dir.string() + ": missing run.json");
    LoadedRun run;
    try {
        const auto meta = json::parse(io::read_file(meta_path));
        run.label = meta.at("model").get<std::string>();
        run.dataset = meta.at("dataset").get<std::string>();
        run.config_hash = meta.at("config_hash").get<std::string>();
        run.eval_samples = meta.at("eval_samples").get<std::size_t>();
        run.seeds = meta.at("seeds").get<std::vector<std::uint64_t>>();
    } catch (const json::exception &e) {
        throw ParseError("run " + dir.string() + ": bad run.json: " + e.what());
    }
    std::vector<std::vector<MetricsRecord>> per_seed;
    for (auto seed : run.seeds) {
        const auto path = dir / seed_file("metrics_seed_", seed, ".csv");
        if (!fs::exists(path)) {
            throw ParseError("run " + dir.string() + ": missing metrics file " + path.filename().string());
        }
        per_seed.push_back(parse_metrics_csv(path));
        const auto samples = load_samples(dir / seed_file("samples_seed_", seed, ".csv"));
        const auto w = pooled_weights(samples);
        run.final_weights.insert(run.final_weights.end(), w.begin(), w.end());
    }
    run.mean = average_records(per_seed);
    return run;
}

// One CSV with an epoch column, one column per run and optional references.
std::string epoch_table(const std::vector<LoadedRun> &runs,
                        double MeanRecord::*field,
                        const std::vector<std::pair<std::string, double>> &references,
                        const std::string &comment) {
    std::set<std::size_t> epochs;
    for (const auto &r : runs) {
        for (const auto &m : r.mean) epochs.insert(m.epoch);
    }
    std::ostringstream out;
    out << "# " << comment << '\n' << "epoch";
    for (const auto &r : runs) out << ',' << r.label;
    for (const auto &ref : references) out << ',' << ref.first;
    out << '\n';
    for (auto e : epochs) {
        out << e;
        for (const auto &r : runs) {
            out << ',';
            const auto it = std::find_if(r.mean.begin(), r.mean.end(),
                                         [e](const MeanRecord &m) { return m.epoch == e; });
            if (it != r.mean.end()) out << io::format_double((*it).*field);
        }
        for (const auto &ref : references) out << ',' << io::format_double(ref.second);
        out << '\n';
    }
    return out.str();
}

}  // namespace

void cmd_report(const ReportOptions &options, const fs::path &out, std::ostream &log) {
    if (options.run_dirs.empty()) throw UsageError("report needs at least one run directory");
    if (options.bins < 2) throw UsageError("--bins must be at least 2");

    std::vector<LoadedRun> runs;
    std::map<std::string, int> label_uses;
    for (const auto &dir : options.run_dirs) runs.push_back(load_run(dir));
    for (const auto &r : runs) ++label_uses[r.label];
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (label_uses[runs[i].label] > 1) {
            runs[i].label += "@" + options.run_dirs[i].filename().string();
        }
    }

    const fs::path dataset_path = options.dataset ? *options.dataset : fs::path(runs.front().dataset);
    const auto training = load_training_data(dataset_path);
    const auto training_weights = pooled_weights(training.samples);
    const double training_std = pooled_weight_std(training.samples);

    std::optional<double> baseline_fraction;
    if (options.baseline) {
        try {
            baseline_fraction =
                json::parse(io::read_file(*options.baseline)).at("valid_fraction").get<double>();
        } catch (const json::exception &e) {
            throw ParseError(options.baseline->string() + ": " + e.what());
        }
    } else {
        log << "note: no --baseline given; KDE reference column omitted\n";
    }

    // e.g. "runs=qugan36[config_hash=ab12 seeds=1;2;3] classical[...]"
    std::string comment = "runs=";
    for (std::size_t i = 0; i < runs.size(); ++i) {
        comment += (i ? " " : "") + runs[i].label + "[config_hash=" + runs[i].config_hash +
                   " seeds=";
        for (std::size_t k = 0; k < runs[i].seeds.size(); ++k) {
            comment += (k ? ";" : "") + std::to_string(runs[i].seeds[k]);
        }
        comment += "]";
    }

    std::vector<std::pair<std::string, double>> valid_refs;
    if (baseline_fraction) {
        valid_refs.emplace_back("kde_baseline",
                                *baseline_fraction * static_cast<double>(runs.front().eval_samples));
    }
    const auto valid_table = epoch_table(runs, &MeanRecord::valid_count, valid_refs, comment);
    const auto std_table =
        epoch_table(runs, &MeanRecord::weight_std, {{"training_data", training_std}}, comment);
    const auto loss_table = epoch_table(runs, &MeanRecord::gen_loss,
                                        {{"reference_ln2", std::log(2.0)}}, comment);

    double hi = *std::max_element(training_weights.begin(), training_weights.end());
    for (const auto &r : runs) {
        if (!r.final_weights.empty()) {
            hi = std::max(hi, *std::max_element(r.final_weights.begin(), r.final_weights.end()));
        }
    }
    const double lo = 0.0;
    std::vector<DensityHistogram> hists;
    for (const auto &r : runs) hists.push_back(histogram(r.final_weights, options.bins, lo, hi));
    hists.push_back(histogram(training_weights, options.bins, lo, hi));

    std::ostringstream density;
    density << "# " << comment << '\n' << "bin_left,bin_right";
    for (const auto &r : runs) density << ',' << r.label;
    density << ",training_data\n";
    for (std::size_t b = 0; b < options.bins; ++b) {
        density << io::format_double(hists.back().bin_edges[b]) << ','
                << io::format_double(hists.back().bin_edges[b + 1]);
        for (const auto &h : hists) density << ',' << io::format_double(h.densities[b]);
        density << '\n';
    }

    fs::create_directories(out);
    io::write_file_atomic(out / "fig_a_valid_graphs.csv", valid_table);
    io::write_file_atomic(out / "fig_b_weight_std.csv", std_table);
    io::write_file_atomic(out / "fig_c_edge_density.csv", density.str());
    io::write_file_atomic(out / "fig_d_gen_loss.csv", loss_table);
    log << "wrote fig_a_valid_graphs.csv, fig_b_weight_std.csv, fig_c_edge_density.csv, "
           "fig_d_gen_loss.csv to "
        << out.string() << '\n';
}

namespace {

std::vector<std::uint64_t> parse_seed_list(const std::string &text) {
    std::vector<std::uint64_t> seeds;
    for (const auto &part : io::split_csv(text)) {
        const auto v = io::parse_int(part, "--seed-list");
        if (v < 0) throw ConfigError("--seed-list entries must be nonnegative");
        seeds.push_back(static_cast<std::uint64_t>(v));
    }
    return seeds;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Hybrid quantum-classical GAN for 4-port distance graphs", "quga"};
    app.require_subcommand(1);

    std::optional<std::string> config_path;
    std::string out_dir;
    std::vector<std::string> overrides;
    std::optional<std::size_t> n;
    std::optional<std::string> model;
    std::optional<std::string> seed_list;
    std::optional<std::size_t> epochs;
    ReportOptions report;
    std::vector<std::string> run_dirs;
    std::optional<std::string> baseline_path;
    std::optional<std::string> dataset_path;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--config", config_path, "experiment config JSON");
        sub->add_option("overrides", overrides, "dotted overrides, e.g. train.epochs=50");
    };
    auto *gen = app.add_subcommand("gen-data", "sample the 4-port training graphs");
    add_common(gen);
    gen->add_option("--out", out_dir, "output directory (default: data.dataset path)");
    gen->add_option("--n", n, "number of graphs");

    auto *tr = app.add_subcommand("train", "train one model over all configured seeds");
    add_common(tr);
    tr->add_option("--out", out_dir, "run directory")->required();
    tr->add_option("--model", model, "classical | qugan36 | qugan66 | qugan72 | qugan132");
    tr->add_option("--seed-list", seed_list, "comma-separated seeds");
    tr->add_option("--epochs", epochs, "training epochs");

    auto *bl = app.add_subcommand("baseline", "KDE random-sampling baseline");
    add_common(bl);
    bl->add_option("--out", out_dir, "output directory")->required();
    bl->add_option("--n", n, "number of sampled graphs");

    auto *rp = app.add_subcommand("report", "figure-panel CSVs from completed runs");
    rp->add_option("--out", out_dir, "report directory")->required();
    rp->add_option("--baseline", baseline_path, "baseline.json from the baseline command");
    rp->add_option("--dataset", dataset_path, "training dataset (default: the first run's)");
    rp->add_option("--bins", report.bins, "density histogram bins");
    rp->add_option("runs", run_dirs, "run directories")->required();

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (rp->parsed()) {
            report.run_dirs.assign(run_dirs.begin(), run_dirs.end());
            if (baseline_path) report.baseline = *baseline_path;
            if (dataset_path) report.dataset = *dataset_path;
            cmd_report(report, out_dir, out);
            return kOk;
        }
        if (n && *n == 0) throw UsageError("--n must be at least 1");
        if (gen->parsed() && n) overrides.push_back("data.n_graphs=" + std::to_string(*n));
        if (bl->parsed() && n) overrides.push_back("baseline.n_samples=" + std::to_string(*n));
        if (model) overrides.push_back("model.name=\"" + *model + "\"");
        if (epochs) overrides.push_back("train.epochs=" + std::to_string(*epochs));
        if (seed_list) {
            json seeds = parse_seed_list(*seed_list);
            overrides.push_back("train.seeds=" + seeds.dump());
        }
        std::optional<fs::path> cfg;
        if (config_path) cfg = *config_path;
        const auto config = load_config(cfg, overrides);

        if (gen->parsed()) {
            cmd_gen_data(config, out_dir, out);
        } else if (tr->parsed()) {
            cmd_train(config, out_dir, thread_budget(config.train.seeds.size()), out);
        } else {
            cmd_baseline(config, out_dir, out);
        }
        return kOk;
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kRuntimeError;
    }
}

}  // namespace quga::cli
