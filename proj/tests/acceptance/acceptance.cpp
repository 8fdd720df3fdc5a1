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

// Acceptance gate: runs every criterion at its stated tolerance and prints one
// PASS/FAIL line per criterion. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "quga/ansatz.hpp"
#include "quga/dataset.hpp"
#include "quga/evaluation.hpp"
#include "quga/generator.hpp"
#include "quga/io.hpp"
#include "quga/kde.hpp"
#include "quga/loss.hpp"
#include "quga/mlp.hpp"
#include "quga/statevector.hpp"
#include "quga/trainer.hpp"
#include "runner/commands.hpp"
#include "scratch.hpp"

namespace {

namespace fs = std::filesystem;
using quga::testing::ScratchDir;
using quga::testing::slurp;
constexpr double kPi = std::numbers::pi;

// Reference values computed independently of this code base.
constexpr double kBaselinePinned = 0.324;
constexpr double kBaselineBand = 0.02;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double v, int digits = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string cfg_path() { return (quga::testing::source_dir() / "configs" / "desk.json").string(); }

int cli(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    const int code = quga::cli::run(args, out, err);
    if (code != 0) std::fprintf(stderr, "quga %s failed: %s\n", args[0].c_str(), err.str().c_str());
    return code;
}

const std::vector<quga::GraphSample> &training_data() {
    static const auto ds =
        quga::load_dataset(quga::testing::source_dir() / "data" / "dataset.csv").samples;
    return ds;
}

// ---------------------------------------------------------------- 1
Outcome parameter_counts() {
    std::mt19937_64 rng(1);
    const std::vector<std::pair<std::string, std::size_t>> expected{
        {"qugan36", 36}, {"qugan66", 66}, {"qugan72", 72}, {"qugan132", 132}, {"classical", 136}};
    Outcome o{true, ""};
    for (const auto &[name, count] : expected) {
        const auto g = quga::Generator::create(*quga::generator_config_for(name), rng);
        o.pass &= g.param_count() == count;
        o.detail += name + "=" + std::to_string(g.param_count()) + " ";
    }
    const auto d = quga::build_discriminator().param_count();
    o.pass &= d == 129;
    o.detail += "discriminator=" + std::to_string(d);
    return o;
}

// ---------------------------------------------------------------- 2
Outcome gradient_oracles() {
    std::mt19937_64 rng(20240);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    std::normal_distribution<double> n01;
    const std::vector<quga::AnsatzSpec> specs{
        {quga::AnsatzFamily::RxRy, 2, 3},     {quga::AnsatzFamily::RxFixedY, 2, 3},
        {quga::AnsatzFamily::RxFixedY, 5, 6}, {quga::AnsatzFamily::RxRy, 5, 6},
        {quga::AnsatzFamily::RxFixedY, 10, 6}, {quga::AnsatzFamily::RxRy, 10, 6}};

    double ps_worst = 0.0;
    int circuits = 0;
    for (int t = 0; t < 24; ++t) {
        const auto &spec = specs[static_cast<std::size_t>(t) % specs.size()];
        std::vector<double> theta(quga::param_count(spec));
        for (auto &x : theta) x = angle(rng);
        std::vector<double> z(spec.n_qubits);
        for (auto &x : z) x = 2 * angle(rng);
        const auto jac = quga::param_shift_jacobian(spec, theta, z);
        for (std::size_t i = 0; i < spec.n_qubits; ++i) {
            auto f = [&](const std::vector<double> &p) {
                return quga::run_generator_circuit(spec, p, z)[i];
            };
            for (std::size_t j = 0; j < theta.size(); ++j) {
                const double fd = quga::testing::central_difference(f, theta, j, 1e-5);
                ps_worst = std::max(ps_worst, std::abs(jac(i, j) - fd));
            }
        }
        ++circuits;
    }

    int mlp_bad = 0;
    for (int t = 0; t < 20; ++t) {
        quga::Mlp m = t % 2 ? quga::build_classical_generator() : quga::build_discriminator();
        m.init_uniform(rng);
        for (auto &p : m.params()) p += 0.1 * n01(rng);
        std::vector<double> x(6), u(m.output_dim());
        for (auto &v : x) v = n01(rng);
        for (auto &v : u) v = n01(rng);
        const auto tape = m.backward(m.forward(x).cache, u);
        const std::vector<double> theta(m.params().begin(), m.params().end());
        auto loss = [&](const std::vector<double> &p) {
            quga::Mlp c = m;
            std::copy(p.begin(), p.end(), c.params().begin());
            const auto y = c.predict(x);
            double acc = 0.0;
            for (std::size_t k = 0; k < y.size(); ++k) acc += u[k] * y[k];
            return acc;
        };
        const auto fd = quga::testing::numerical_gradient(loss, theta, 1e-5);
        for (std::size_t k = 0; k < theta.size(); ++k) {
            if (!quga::testing::close_relative(tape.params[k], fd[k], 1e-4, 1e-6)) ++mlp_bad;
        }
    }

    // 3-qubit toy: circuit -> renormalize -> discriminator -> BCE(., 1).
    double e2e_worst = 0.0;
    for (int t = 0; t < 10; ++t) {
        const quga::AnsatzSpec spec = specs[static_cast<std::size_t>(t) % 2];
        std::vector<double> theta(quga::param_count(spec));
        for (auto &x : theta) x = angle(rng);
        std::vector<double> z(3);
        for (auto &x : z) x = n01(rng);
        quga::Mlp disc({3, 4, 1}, quga::Activation::LeakyReLU, quga::Activation::Sigmoid);
        disc.init_uniform(rng);
        for (auto &p : disc.params()) p *= 4.0;
        auto normalized = [&](const std::vector<double> &p) {
            auto m = quga::run_generator_circuit(spec, p, z);
            const double s = m[0] + m[1] + m[2];
            for (auto &v : m) v /= s;
            return m;
        };
        auto loss = [&](const std::vector<double> &p) {
            return quga::bce_loss(disc.predict(normalized(p))[0], 1.0);
        };
        const auto raw = quga::run_generator_circuit(spec, theta, z);
        const auto fwd = disc.forward(normalized(theta));
        const double up = quga::bce_grad(fwd.output[0], 1.0);
        const auto tape = disc.backward(fwd.cache, std::span(&up, 1));
        const auto grad =
            quga::adjoint_vjp(spec, theta, z, quga::renormalize_vjp(raw, tape.input));
        const auto fd = quga::testing::numerical_gradient(loss, theta, 1e-5);
        for (std::size_t j = 0; j < theta.size(); ++j) {
            const double scale = std::max(std::abs(grad[j]), std::abs(fd[j]));
            const double rel = scale > 1e-8 ? std::abs(grad[j] - fd[j]) / scale : 0.0;
            e2e_worst = std::max(e2e_worst, rel);
        }
    }

    Outcome o;
    o.pass = circuits >= 20 && ps_worst < 1e-6 && mlp_bad == 0 && e2e_worst < 1e-4;
    o.detail = std::to_string(circuits) + " circuits, shift-vs-FD max abs " + fmt(ps_worst, 3) +
               " (< 1e-6); MLP mismatches " + std::to_string(mlp_bad) +
               " (1e-4 rel); 3-qubit end-to-end max rel " + fmt(e2e_worst, 3) + " (< 1e-4)";
    return o;
}

// ---------------------------------------------------------------- 3
Outcome simulator_invariants() {
    std::mt19937_64 rng(333);
    std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);
    double norm_worst = 0.0, sum_worst = 0.0;
    bool marg_ok = true;
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + static_cast<std::size_t>(t) % 5;
        quga::Statevector s(n);
        std::uniform_int_distribution<std::size_t> wire(0, n - 1);
        std::uniform_int_distribution<int> kind(0, 3);
        for (int g = 0; g < 200; ++g) {
            const std::size_t q = wire(rng);
            switch (kind(rng)) {
            case 0: s.apply_rx(q, angle(rng)); break;
            case 1: s.apply_ry(q, angle(rng)); break;
            case 2: s.apply_pauli_y(q); break;
            default: {
                std::size_t tq = wire(rng);
                while (tq == q) tq = wire(rng);
                s.apply_cnot(q, tq);
            }
            }
        }
        norm_worst = std::max(norm_worst, std::abs(s.norm_squared() - 1.0));
        double total = 0.0;
        for (const auto &a : s.amplitudes()) total += std::norm(a);
        sum_worst = std::max(sum_worst, std::abs(total - 1.0));
        for (double p : s.marginals_zero()) marg_ok &= p >= 0.0 && p <= 1.0;
    }
    Outcome o;
    o.pass = norm_worst < 1e-10 && sum_worst < 1e-10 && marg_ok;
    o.detail = "100 x 200-gate sequences: max |norm-1| " + fmt(norm_worst, 3) +
               ", max |sum p - 1| " + fmt(sum_worst, 3) + ", marginals in [0,1]: " +
               (marg_ok ? "yes" : "no");
    return o;
}

// ---------------------------------------------------------------- 4
Outcome triangle_equivalence() {
    std::mt19937_64 rng(4444);
    std::uniform_real_distribution<double> scale_exp(-6.0, 6.0);
    std::array<std::size_t, 4> perm{0, 1, 2, 3};
    int disagree = 0, perm_bad = 0, scale_bad = 0, invalid = 0;
    for (int i = 0; i < 10000; ++i) {
        const auto w = quga::testing::random_weights(rng, quga::kTriangleTolerance);
        const bool expect = quga::testing::brute_force_triangle_valid(w, quga::kTriangleTolerance);
        const bool got = quga::triangle_valid(w).valid;
        disagree += got != expect;
        invalid += !expect;
        std::shuffle(perm.begin(), perm.end(), rng);
        perm_bad += quga::triangle_valid(quga::testing::permute_nodes(w, perm)).valid != got;
        const double c = std::pow(10.0, scale_exp(rng));
        auto scaled = w;
        for (auto &x : scaled) x *= c;
        scale_bad += quga::triangle_valid(scaled).valid != got;
    }
    Outcome o;
    o.pass = disagree == 0 && perm_bad == 0 && scale_bad == 0;
    o.detail = "10000 vectors (" + std::to_string(invalid) + " invalid): oracle disagreements " +
               std::to_string(disagree) + ", permutation flips " + std::to_string(perm_bad) +
               ", scale flips " + std::to_string(scale_bad);
    return o;
}

// ---------------------------------------------------------------- 6
struct TrainedModel {
    std::string name;
    double final_valid_fraction = 0.0;
    std::size_t final_epoch = 0;
    double seconds = 0.0;
};

std::vector<std::string> read_lines(const fs::path &p) {
    std::vector<std::string> lines;
    std::istringstream in(slurp(p));
    for (std::string l; std::getline(in, l);) {
        if (!l.empty() && l[0] != '#') lines.push_back(l);
    }
    return lines;
}

TrainedModel train_desk(const std::string &model, const fs::path &dir) {
    const auto t0 = std::chrono::steady_clock::now();
    const int code = cli({"train", "--config", cfg_path(), "--out", dir.string(), "--model", model,
                          "--epochs", "200", "--seed-list", "1,2,3", "eval.eval_every=10",
                          "eval.eval_samples=1000"});
    TrainedModel t{model};
    t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (code != 0) return t;
    const auto lines = read_lines(dir / "metrics_mean.csv");
    const auto last = quga::io::split_csv(lines.back());
    t.final_epoch = static_cast<std::size_t>(std::stoul(last[1]));
    t.final_valid_fraction = std::stod(last[2]) / 1000.0;
    return t;
}

Outcome desk_training(const std::vector<TrainedModel> &models, double baseline) {
    const auto &q = models[0];
    const auto &c = models[1];
    Outcome o;
    o.pass = q.final_epoch == 200 && c.final_epoch == 200 && q.final_valid_fraction >= 0.55 &&
             q.final_valid_fraction - baseline >= 0.15 && c.final_valid_fraction >= 0.50;
    o.detail = "qugan36 final valid " + fmt(q.final_valid_fraction) + " (>= 0.55, baseline " +
               fmt(baseline) + " + 0.15), classical " + fmt(c.final_valid_fraction) +
               " (>= 0.50); " + fmt(q.seconds, 3) + " s and " + fmt(c.seconds, 3) + " s";
    return o;
}

// ---------------------------------------------------------------- 5
Outcome baseline_behavior(const fs::path &dir, const std::vector<TrainedModel> &models,
                          double &fraction_out) {
    Outcome o;
    if (cli({"baseline", "--config", cfg_path(), "--out", dir.string()}) != 0) {
        o.detail = "baseline command failed";
        return o;
    }
    const auto j = nlohmann::json::parse(slurp(dir / "baseline.json"));
    const double f = j.at("valid_fraction").get<double>();
    fraction_out = f;
    bool below_all = true;
    for (const auto &m : models) below_all &= f < m.final_valid_fraction;
    o.pass = std::abs(f - kBaselinePinned) <= kBaselineBand && f < 0.5 && below_all &&
             j.at("n_samples").get<std::size_t>() == 1000;
    o.detail = "valid fraction " + fmt(f) + " over 1000 draws (pinned " + fmt(kBaselinePinned) +
               " +/- " + fmt(kBaselineBand) + "), < 0.5, below every trained model: " +
               (below_all ? "yes" : "no");
    return o;
}

// ---------------------------------------------------------------- 7, 9
struct EpochZero {
    double max_std_ratio = 0.0;
    std::size_t min_valid = 1000;
    std::string worst_std_model;
    std::string worst_valid_model;
};

EpochZero epoch_zero_sweep() {
    quga::TrainConfig cfg;
    cfg.epochs = 0;
    cfg.seeds = {1, 2, 3};
    cfg.eval_samples = 1000;
    cfg.eval_every = 10;
    const double data_std = quga::pooled_weight_std(training_data());
    EpochZero ez;
    for (const auto &name : quga::model_names()) {
        const auto res = quga::train(cfg, *quga::generator_config_for(name), training_data(),
                                     quga::cli::thread_budget(3));
        for (const auto &run : res.runs) {
            const auto &r = run.records.front();
            const double ratio = r.weight_std / data_std;
            if (ratio > ez.max_std_ratio) {
                ez.max_std_ratio = ratio;
                ez.worst_std_model = name + "/seed" + std::to_string(run.seed);
            }
            if (r.valid_count < ez.min_valid) {
                ez.min_valid = r.valid_count;
                ez.worst_valid_model = name + "/seed" + std::to_string(run.seed);
            }
        }
    }
    return ez;
}

// ---------------------------------------------------------------- 8
Outcome determinism(const fs::path &dir) {
    Outcome o{true, ""};
    for (const char *tag : {"a", "b"}) {
        const auto d = dir / tag;
        o.pass &= cli({"gen-data", "--config", cfg_path(), "--out", d.string()}) == 0;
        for (const char *model : {"qugan36", "classical"}) {
            o.pass &= cli({"train", "--config", cfg_path(), "--out", (d / model).string(),
                           "--model", model, "--epochs", "3", "--seed-list", "1,2",
                           "eval.eval_every=1", "eval.eval_samples=200"}) == 0;
        }
    }
    if (!o.pass) {
        o.detail = "a command failed";
        return o;
    }
    std::vector<fs::path> files{"dataset.csv", "dataset.json"};
    for (const char *model : {"qugan36", "classical"}) {
        for (const char *f : {"metrics_seed_1.csv", "metrics_seed_2.csv", "metrics_mean.csv"}) {
            files.push_back(fs::path(model) / f);
        }
    }
    int identical = 0;
    for (const auto &f : files) {
        const auto a = slurp(dir / "a" / f);
        const bool same = !a.empty() && a == slurp(dir / "b" / f);
        identical += same;
        if (!same) o.detail += "differs: " + f.string() + "; ";
    }
    o.pass = identical == static_cast<int>(files.size());
    o.detail += std::to_string(identical) + "/" + std::to_string(files.size()) +
                " dataset and metrics files byte-identical across two runs";
    return o;
}

}  // namespace

int main() {
    ScratchDir work("acceptance");
    std::vector<std::pair<std::string, Outcome>> results;
    auto timed = [](const char *what, const std::function<Outcome()> &fn) {
        std::fprintf(stderr, "running %s...\n", what);
        return fn();
    };

    results.emplace_back("1 parameter counts", timed("1", parameter_counts));
    results.emplace_back("2 gradient oracles", timed("2", gradient_oracles));
    results.emplace_back("3 simulator invariants", timed("3", simulator_invariants));
    results.emplace_back("4 triangle validator oracle", timed("4", triangle_equivalence));

    std::fprintf(stderr, "running 6 (desk-scale training)...\n");
    std::vector<TrainedModel> trained{train_desk("qugan36", work / "qugan36"),
                                      train_desk("classical", work / "classical")};
    double baseline = 1.0;
    const Outcome c5 = baseline_behavior(work / "baseline", trained, baseline);
    const Outcome c6 = desk_training(trained, baseline);
    results.emplace_back("5 KDE baseline", c5);
    results.emplace_back("6 desk-scale training", c6);

    std::fprintf(stderr, "running 7 and 9 (epoch-0 sweep)...\n");
    const auto ez = epoch_zero_sweep();
    const double data_std = quga::pooled_weight_std(training_data());
    results.emplace_back(
        "7 epoch-0 variance",
        Outcome{ez.max_std_ratio < 1.0,
                "max generated/training std ratio " + fmt(ez.max_std_ratio) + " at " +
                    ez.worst_std_model + " (training std " + fmt(data_std) +
                    "), 5 models x 3 seeds"});
    results.emplace_back("8 determinism", timed("8", [&] { return determinism(work / "det"); }));
    results.emplace_back(
        "9 epoch-0 validity",
        Outcome{ez.min_valid >= 900, "min epoch-0 valid count " + std::to_string(ez.min_valid) +
                                         "/1000 at " + ez.worst_valid_model +
                                         " (>= 900), 5 models x 3 seeds"});

    std::sort(results.begin(), results.end(), [](const auto &a, const auto &b) {
        return std::stoi(a.first) < std::stoi(b.first);
    });
    int failures = 0;
    for (const auto &[name, o] : results) {
        std::printf("[%s] criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(),
                    o.detail.c_str());
        failures += !o.pass;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
                results.size());
    return failures == 0 ? 0 : 1;
}
