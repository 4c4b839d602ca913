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

#include "cli.h"

#include <array>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qsep/factorizer.h"
#include "qsep/io.h"
#include "qsep/oracle.h"
#include "qsep/permutation.h"
#include "qsep/random.h"
#include "qsep/state.h"

namespace qsep::cli {

using nlohmann::json;

void AnalysisConfig::validate() const {
    if (!(tolerance > 0 && tolerance <= 1e-2)) {
        throw std::invalid_argument("--tol must be in (0, 1e-2]");
    }
    if (max_n < 1 || max_n > kMaxQubits) {
        throw std::invalid_argument("--max-n must be in [1, " + std::to_string(kMaxQubits) + "]");
    }
}

std::optional<uint64_t> concurrence_count(int n) {
    static constexpr std::array<uint64_t, 9> kCounts = {2, 18, 112, 600, 2976, 14112, 65024, 293760, 1308160};
    if (n < 2 || n > 10) {
        return std::nullopt;
    }
    return kCounts[n - 2];
}

std::filesystem::path sidecar_path(const std::filesystem::path &state_file) {
    std::filesystem::path p = state_file;
    p.replace_extension(".truth.json");
    return p;
}

namespace {

/// Writes to --out when given, else to `fallback`.
class Sink {
   public:
    Sink(const std::filesystem::path &path, std::ostream &fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw std::runtime_error("cannot write " + path.string());
            }
            stream_ = &file_;
        } else {
            stream_ = &fallback;
        }
    }
    std::ostream &operator*() {
        return *stream_;
    }

   private:
    std::ofstream file_;
    std::ostream *stream_;
};

PureState load_checked(const std::filesystem::path &path, const AnalysisConfig &config) {
    PureState s = load_state_file(path);
    if (s.num_qubits() > config.max_n) {
        throw std::invalid_argument("state has " + std::to_string(s.num_qubits()) + " qubits, above --max-n " +
                                    std::to_string(config.max_n));
    }
    return s;
}

std::string fmt_double(double x) {
    std::ostringstream ss;
    ss << std::setprecision(3) << x;
    return ss.str();
}

void write_text_report(std::ostream &out, const FactorizationReport &r) {
    out << "qubits: " << r.num_qubits << "\n";
    out << "tolerance: " << r.tolerance << "\n";
    if (r.verdict == Verdict::Product) {
        out << "PRODUCT: " << r.partition_str() << "\n";
        for (const auto &f : r.factors) {
            if (f.entangled) {
                out << "  factor " << f.qubits.str() << " is genuinely entangled\n";
            }
        }
    } else {
        out << "GENUINELY ENTANGLED\n";
        out << "certificate: " << r.certificate.size() << " witnesses\n";
        for (const auto &c : r.certificate) {
            out << "  " << c.split.str() << " mover " << c.split.mover.str() << ": blocks (" << c.witness.reference_block
                << "," << c.witness.offending_block << ") entries (" << c.witness.entries.first << ","
                << c.witness.entries.second << ") residual " << fmt_double(c.witness.residual) << "\n";
        }
    }
    if (r.num_qubits >= 2) {
        out << "splits examined: " << r.splits_examined << " of D = " << bipartition_count(r.num_qubits) << "\n";
        out << "vectors examined: " << r.vectors_examined << " (budget " << permutation_budget(r.num_qubits)
            << ")\n";
    }
    out << "reconstruction residual: " << fmt_double(r.residual) << "\n";
}

struct Analysis {
    FactorizationReport report;
    std::optional<bool> oracle_entangled;
};

Analysis analyze_state(const PureState &s, const AnalysisConfig &config) {
    Analysis a;
    a.report = full_factorize(s, ScanOptions{config.tolerance, config.parallel, 0});
    if (config.verify && s.num_qubits() >= 2) {
        a.oracle_entangled = oracle::oracle_verdict(s, config.tolerance);
    }
    return a;
}

int finish(const Analysis &a, const AnalysisConfig &config, json extra, std::ostream &out, std::ostream &err) {
    const auto &r = a.report;
    bool mismatch =
        a.oracle_entangled.has_value() && *a.oracle_entangled != (r.verdict == Verdict::GenuinelyEntangled);
    Sink sink(config.output, out);
    if (config.format == Format::Json) {
        json j = report_to_json(r);
        if (a.oracle_entangled) {
            j["verify"] = {{"oracle_genuinely_entangled", *a.oracle_entangled}, {"agree", !mismatch}};
        }
        for (auto &[k, v] : extra.items()) {
            j[k] = v;
        }
        *sink << j.dump(2) << "\n";
    } else {
        write_text_report(*sink, r);
        if (a.oracle_entangled) {
            *sink << "verify: minor oracle says " << (*a.oracle_entangled ? "genuinely entangled" : "product") << " ("
                  << (mismatch ? "DISAGREES" : "agrees") << ")\n";
        }
        if (extra.contains("factor_files")) {
            for (const auto &f : extra["factor_files"]) {
                *sink << "wrote " << f.get<std::string>() << "\n";
            }
        }
    }
    if (mismatch) {
        err << "error: block-proportionality verdict and minor oracle disagree\n";
        return kExitVerifyMismatch;
    }
    return r.verdict == Verdict::Product ? kExitProduct : kExitEntangled;
}

}  // namespace

int cmd_analyze(const std::filesystem::path &state_file, const AnalysisConfig &config, std::ostream &out,
                std::ostream &err) {
    try {
        config.validate();
        PureState s = load_checked(state_file, config);
        return finish(analyze_state(s, config), config, json::object(), out, err);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

int cmd_factorize(const std::filesystem::path &state_file, const std::filesystem::path &factor_dir,
                  const AnalysisConfig &config, std::ostream &out, std::ostream &err) {
    try {
        config.validate();
        PureState s = load_checked(state_file, config);
        if (s.num_qubits() == 1) {
            err << "warning: nothing to split (single-qubit state)\n";
        }
        Analysis a = analyze_state(s, config);
        json extra = json::object();
        if (a.report.verdict == Verdict::Product) {
            std::filesystem::create_directories(factor_dir);
            json files = json::array();
            for (size_t k = 0; k < a.report.factors.size(); k++) {
                const auto &f = a.report.factors[k];
                auto path = factor_dir / ("factor_" + std::to_string(k + 1) + ".json");
                json j = state_to_json(f.state);
                j["qubits"] = f.qubits.labels();
                std::ofstream o(path);
                if (!o) {
                    throw std::runtime_error("cannot write " + path.string());
                }
                o << j.dump() << "\n";
                files.push_back(path.string());
            }
            extra["factor_files"] = files;
        }
        return finish(a, config, extra, out, err);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

int cmd_generate(const GenerateParams &p, std::ostream &out, std::ostream &err) {
    try {
        std::optional<PureState> s;
        std::optional<GroundTruth> truth;
        if (p.name == "ghz") {
            s = ghz(p.n);
        } else if (p.name == "w") {
            s = w(p.n);
        } else if (p.name == "dicke") {
            s = dicke(p.i, p.n);
        } else if (p.name == "dw") {
            s = dw(p.n);
        } else if (p.name == "ghzw") {
            s = ghz_plus_w(p.n);
        } else if (p.name == "zeta") {
            s = zeta3();
        } else if (p.name == "product-random") {
            if (p.partition.empty()) {
                throw std::invalid_argument("product-random needs --partition, e.g. \"1,3|2,4\"");
            }
            if (p.output.empty()) {
                throw std::invalid_argument("product-random needs --out for its ground-truth sidecar");
            }
            auto parts = parse_partition(p.partition);
            std::mt19937_64 rng(p.seed);
            auto sample = random_product(parts, rng);
            s = sample.state;
            truth = GroundTruth{sample.partition, p.seed};
        } else {
            throw std::invalid_argument("unknown state name '" + p.name + "'");
        }
        Sink sink(p.output, out);
        *sink << state_to_json(*s).dump() << "\n";
        if (truth) {
            std::ofstream side(sidecar_path(p.output));
            if (!side) {
                throw std::runtime_error("cannot write " + sidecar_path(p.output).string());
            }
            side << ground_truth_to_json(*truth).dump() << "\n";
        }
        return 0;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

int cmd_bench(const BenchParams &p, std::ostream &out, std::ostream &err) {
    try {
        if (p.n_min < 2 || p.n_max < p.n_min || p.n_max > kMaxQubits) {
            throw std::invalid_argument("bench range must satisfy 2 <= n-min <= n-max <= " +
                                        std::to_string(kMaxQubits));
        }
        json rows = json::array();
        if (p.format == Format::Text) {
            out << std::left << std::setw(4) << "n" << std::setw(12) << "D" << std::setw(12) << "budget"
                << std::setw(10) << "Q" << "ghz_scan_s\n";
        }
        for (int n = p.n_min; n <= p.n_max; n++) {
            uint64_t d = bipartition_count(n);
            uint64_t budget = permutation_budget(n);
            auto q = concurrence_count(n);
            std::optional<double> seconds;
            if (p.timing) {
                PureState g = ghz(n);
                auto t0 = std::chrono::steady_clock::now();
                auto check = is_genuinely_entangled(g, ScanOptions{kDefaultTolerance, p.parallel, 0});
                seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                if (!check.genuinely_entangled) {
                    throw std::logic_error("ghz(" + std::to_string(n) + ") was not found genuinely entangled");
                }
            }
            if (p.format == Format::Json) {
                json row = {{"n", n}, {"D", d}, {"budget", budget}};
                row["Q"] = q ? json(*q) : json(nullptr);
                row["ghz_scan_seconds"] = seconds ? json(*seconds) : json(nullptr);
                rows.push_back(row);
            } else {
                out << std::left << std::setw(4) << n << std::setw(12) << d << std::setw(12) << budget
                    << std::setw(10) << (q ? std::to_string(*q) : "") << (seconds ? fmt_double(*seconds) : "")
                    << "\n";
            }
        }
        if (p.format == Format::Json) {
            out << json{{"rows", rows}}.dump(2) << "\n";
        }
        return 0;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"qsep: separability of n-qubit pure states by block-vector proportionality"};
    app.require_subcommand(1);

    AnalysisConfig config;
    std::string format = "text";
    std::filesystem::path state_file;
    std::filesystem::path factor_dir = ".";
    auto add_analysis_flags = [&](CLI::App *sub) {
        sub->add_option("state", state_file, "State file (JSON)")->required();
        sub->add_option("--tol", config.tolerance, "Relative tolerance, in (0, 1e-2]");
        sub->add_flag("--verify", config.verify, "Cross-check with the 2x2-minor oracle (exit 3 on disagreement)");
        sub->add_flag("--parallel", config.parallel, "Scan bipartitions on all cores");
        sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", config.output, "Write the report here instead of stdout");
        sub->add_option("--max-n", config.max_n, "Largest accepted qubit count (default 24)");
    };
    auto *analyze = app.add_subcommand("analyze", "Decide product vs genuinely entangled");
    add_analysis_flags(analyze);
    auto *factorize = app.add_subcommand("factorize", "Finest factorization, one file per factor");
    add_analysis_flags(factorize);
    factorize->add_option("--out-dir", factor_dir, "Directory for factor_<k>.json files");

    GenerateParams gen;
    auto *generate = app.add_subcommand("generate", "Write a named or random product state");
    generate->add_option("name", gen.name, "ghz|w|dicke|dw|ghzw|zeta|product-random")
        ->required()
        ->check(CLI::IsMember({"ghz", "w", "dicke", "dw", "ghzw", "zeta", "product-random"}));
    generate->add_option("--n", gen.n, "Qubit count");
    generate->add_option("--i", gen.i, "Dicke excitation number");
    generate->add_option("--seed", gen.seed, "RNG seed for product-random");
    generate->add_option("--partition", gen.partition, "Parts for product-random, e.g. \"1,3|2,4\"");
    generate->add_option("--out", gen.output, "Output state file (default stdout)");

    BenchParams bench;
    std::string bench_format = "text";
    auto *bench_cmd = app.add_subcommand("bench", "Bipartition counts and GHZ scan timings per qubit count");
    bench_cmd->add_option("--n-min", bench.n_min, "Smallest n (>= 2)");
    bench_cmd->add_option("--n-max", bench.n_max, "Largest n");
    bench_cmd->add_flag("--no-timing{false}", bench.timing, "Skip the GHZ scan timings");
    bench_cmd->add_flag("--parallel", bench.parallel, "Scan bipartitions on all cores");
    bench_cmd->add_option("--format", bench_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitError;
    }
    config.format = format == "json" ? Format::Json : Format::Text;
    bench.format = bench_format == "json" ? Format::Json : Format::Text;
    if (config.max_n > kDefaultMaxQubits) {
        err << "warning: --max-n " << config.max_n << " exceeds the default of " << kDefaultMaxQubits
            << "; memory use doubles per extra qubit\n";
    }

    if (*analyze) {
        return cmd_analyze(state_file, config, out, err);
    }
    if (*factorize) {
        return cmd_factorize(state_file, factor_dir, config, out, err);
    }
    if (*generate) {
        return cmd_generate(gen, out, err);
    }
    return cmd_bench(bench, out, err);
}

}  // namespace qsep::cli
