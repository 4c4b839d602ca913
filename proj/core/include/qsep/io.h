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

#ifndef QSEP_IO_H
#define QSEP_IO_H

#include <cstdint>
#include <filesystem>
#include <vector>

#include <nlohmann/json.hpp>

#include "qsep/factorizer.h"
#include "qsep/state.h"

namespace qsep {

// State files: {"n": <int>, "amplitudes": [[re, im], ...]} with 2^n entries
// in ascending basis index order.

/// Throws std::invalid_argument with a diagnostic on malformed input.
PureState state_from_json(const nlohmann::json &j);
nlohmann::json state_to_json(const PureState &state);

PureState load_state_file(const std::filesystem::path &path);
void save_state_file(const std::filesystem::path &path, const PureState &state);

/// Ground truth written next to generated product states:
/// {"partition": [[1,3],[2,4]], "seed": 7}.
struct GroundTruth {
    std::vector<QubitLabelSet> partition;
    uint64_t seed = 0;
};
nlohmann::json ground_truth_to_json(const GroundTruth &g);
GroundTruth ground_truth_from_json(const nlohmann::json &j);

nlohmann::json bipartition_to_json(const Bipartition &b);
nlohmann::json report_to_json(const FactorizationReport &report);

}  // namespace qsep

#endif
