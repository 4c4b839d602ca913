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

#ifndef QSEP_RANDOM_H
#define QSEP_RANDOM_H

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qsep/state.h"

namespace qsep {

/// Unit vector with i.i.d. complex Gaussian entries (Haar distributed).
PureState random_state(int n, std::mt19937_64 &rng);

/// Parses "1,3|2,4" into label sets. The parts must partition 1..n, where n
/// is the largest label.
std::vector<QubitLabelSet> parse_partition(const std::string &text);
std::string partition_str(const std::vector<QubitLabelSet> &parts);

struct ProductSample {
    PureState state;
    /// Parts sorted by smallest label.
    std::vector<QubitLabelSet> partition;
};

/// Tensor of independent random states, one per part, with qubits placed at
/// their labels.
ProductSample random_product(const std::vector<QubitLabelSet> &partition, std::mt19937_64 &rng);

/// Random assignment of labels 1..n to parts of the given sizes.
std::vector<QubitLabelSet> random_partition(const std::vector<int> &sizes, std::mt19937_64 &rng);

/// Integer partitions of n, each listed in non-increasing order.
std::vector<std::vector<int>> integer_partitions(int n);

}  // namespace qsep

#endif
