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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"

namespace quga::cli {

/// Process exit codes.
enum ExitCode : int { kOk = 0, kUsageError = 1, kRuntimeError = 2 };

/// Usage problem detected after argument parsing (maps to exit code 1).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Writes `<out>/dataset.csv` and its sidecar, or data.dataset when out is empty.
void cmd_gen_data(const RunConfig &config, const std::filesystem::path &out, std::ostream &log);

/// Trains config.model.name for every seed and writes metrics, samples,
/// checkpoints and run.json under `out`.
void cmd_train(const RunConfig &config, const std::filesystem::path &out, std::size_t threads,
               std::ostream &log);

/// Fits the KDE baseline and writes baseline.json and baseline_samples.csv.
void cmd_baseline(const RunConfig &config, const std::filesystem::path &out, std::ostream &log);

struct ReportOptions {
    std::vector<std::filesystem::path> run_dirs;
    std::optional<std::filesystem::path> baseline;
    std::optional<std::filesystem::path> dataset;  ///< defaults to the first run's
    std::size_t bins = 40;
};

/// Emits the four figure-panel CSVs under `out`.
void cmd_report(const ReportOptions &options, const std::filesystem::path &out, std::ostream &log);

/// Concurrency cap: QUGA_THREADS if set, else `fallback`.
[[nodiscard]] std::size_t thread_budget(std::size_t fallback);

/// Full command-line entry point; returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace quga::cli
