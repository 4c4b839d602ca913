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

#include "qsep/io.h"

#include <fstream>
#include <stdexcept>

namespace qsep {

using nlohmann::json;

PureState state_from_json(const json &j) {
    if (!j.is_object()) {
        throw std::invalid_argument("state file must hold a JSON object");
    }
    if (!j.contains("n") || !j["n"].is_number_integer()) {
        throw std::invalid_argument("state file needs an integer field \"n\"");
    }
    if (!j.contains("amplitudes") || !j["amplitudes"].is_array()) {
        throw std::invalid_argument("state file needs an array field \"amplitudes\"");
    }
    int64_t n = j["n"].get<int64_t>();
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("\"n\" must be in [1, " + std::to_string(kMaxQubits) + "]");
    }
    const auto &arr = j["amplitudes"];
    size_t count = arr.size();
    if (count == 0 || (count & (count - 1)) != 0) {
        throw std::invalid_argument("amplitude count " + std::to_string(count) + " is not a power of two");
    }
    if (count != (size_t{1} << n)) {
        throw std::invalid_argument("n = " + std::to_string(n) + " needs " + std::to_string(size_t{1} << n) +
                                    " amplitudes, got " + std::to_string(count));
    }
    std::vector<amp_t> amps;
    amps.reserve(count);
    for (size_t k = 0; k < count; k++) {
        const auto &e = arr[k];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
            throw std::invalid_argument("amplitude " + std::to_string(k) + " must be a [re, im] pair of numbers");
        }
        amps.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return PureState(static_cast<int>(n), std::move(amps));
}

json state_to_json(const PureState &state) {
    json amps = json::array();
    for (const auto &a : state.amplitudes()) {
        amps.push_back({a.real(), a.imag()});
    }
    return json{{"n", state.num_qubits()}, {"amplitudes", std::move(amps)}};
}

PureState load_state_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open state file " + path.string());
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument("malformed JSON in " + path.string() + ": " + e.what());
    }
    return state_from_json(j);
}

void save_state_file(const std::filesystem::path &path, const PureState &state) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << state_to_json(state).dump() << "\n";
}

json ground_truth_to_json(const GroundTruth &g) {
    json parts = json::array();
    for (const auto &p : g.partition) {
        parts.push_back(p.labels());
    }
    return json{{"partition", std::move(parts)}, {"seed", g.seed}};
}

GroundTruth ground_truth_from_json(const json &j) {
    GroundTruth g;
    for (const auto &p : j.at("partition")) {
        g.partition.emplace_back(p.get<std::vector<int>>());
    }
    g.seed = j.at("seed").get<uint64_t>();
    return g;
}

json bipartition_to_json(const Bipartition &b) {
    return json{{"left", b.left.labels()}, {"right", b.right.labels()}, {"mover", b.mover.mapping()}};
}

json report_to_json(const FactorizationReport &report) {
    json factors = json::array();
    for (const auto &f : report.factors) {
        json st = state_to_json(f.state);
        factors.push_back(
            {{"qubits", f.qubits.labels()}, {"entangled", f.entangled}, {"amplitudes", std::move(st["amplitudes"])}});
    }
    json cert = json::array();
    for (const auto &c : report.certificate) {
        cert.push_back({{"bipartition", bipartition_to_json(c.split)},
                        {"blocks", {c.witness.reference_block, c.witness.offending_block}},
                        {"entries", {c.witness.entries.first, c.witness.entries.second}},
                        {"residual", c.witness.residual}});
    }
    return json{
        {"n", report.num_qubits},
        {"tolerance", report.tolerance},
        {"verdict", report.verdict == Verdict::Product ? "product" : "genuinely_entangled"},
        {"factors", std::move(factors)},
        {"certificate", std::move(cert)},
        {"residual", report.residual},
        {"splits_examined", report.splits_examined},
        {"vectors_examined", report.vectors_examined},
        {"total_splits_examined", report.total_splits_examined},
        {"bipartitions", report.num_qubits >= 2 ? bipartition_count(report.num_qubits) : 0},
        {"permutation_budget", report.num_qubits >= 2 ? permutation_budget(report.num_qubits) : 0},
        {"timings", {{"factorize_seconds", report.elapsed_seconds}}},
    };
}

}  // namespace qsep
