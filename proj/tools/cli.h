// Copyright 2026 The qsep Authors
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

#ifndef QSEP_TOOLS_CLI_H
#define QSEP_TOOLS_CLI_H

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qsep::cli {

enum ExitCode : int {
    kExitProduct = 0,
    kExitEntangled = 1,
    kExitError = 2,
    kExitVerifyMismatch = 3,
};

enum class Format { Text, Json };

constexpr int kDefaultMaxQubits = 24;

struct AnalysisConfig {
    double tolerance = 1e-9;
    bool verify = false;
    bool parallel = false;
    /// Empty means stdout.
    std::filesystem::path output;
    Format format = Format::Text;
    int max_n = kDefaultMaxQubits;

    /// Throws std::invalid_argument unless tolerance is in (0, 1e-2].
    void validate() const;
};

int cmd_analyze(const std::filesystem::path &state_file, const AnalysisConfig &config, std::ostream &out,
                std::ostream &err);

/// Like analyze, and writes factor_<k>.json files (state format plus a
/// "qubits" field) into `factor_dir` when the verdict is product.
int cmd_factorize(const std::filesystem::path &state_file, const std::filesystem::path &factor_dir,
                  const AnalysisConfig &config, std::ostream &out, std::ostream &err);

struct GenerateParams {
    std::string name;
    int n = 0;
    int i = 0;
    uint64_t seed = 0;
    std::string partition;
    /// Empty means stdout; product-random requires a path for its sidecar.
    std::filesystem::path output;
};

int cmd_generate(const GenerateParams &params, std::ostream &out, std::ostream &err);

/// Sidecar path for a generated state file: "x.json" -> "x.truth.json".
std::filesystem::path sidecar_path(const std::filesystem::path &state_file);

struct BenchParams {
    int n_min = 2;
    int n_max = 10;
    bool timing = true;
    Format format = Format::Text;
    bool parallel = false;
};

/// Generalized-concurrence comparison counts for n = 2..10; empty otherwise.
std::optional<uint64_t> concurrence_count(int n);

int cmd_bench(const BenchParams &params, std::ostream &out, std::ostream &err);

/// Full command line entry point.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qsep::cli

#endif
