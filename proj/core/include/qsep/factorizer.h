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

#ifndef QSEP_FACTORIZER_H
#define QSEP_FACTORIZER_H

#include <cstdint>
#include <optional>
#include <vector>

#include "qsep/blocks.h"
#include "qsep/permutation.h"
#include "qsep/state.h"

namespace qsep {

struct ScanOptions {
    double tol = kDefaultTolerance;
    /// Spread the bipartition scan over threads. Results are identical to the
    /// sequential scan: the lowest-index success wins.
    bool parallel = false;
    /// 0 means std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// A bipartition that failed, and the block pair showing it.
struct CertificateEntry {
    Bipartition split;
    BlockWitness witness;
};

/// A successful split of a state into two tensor factors.
struct FoundSplit {
    Bipartition split;
    /// Position of `split` in enumerate_bipartitions order.
    size_t index = 0;
    /// Permutation applied before splitting at `width` (identity for prefix cuts).
    QubitPermutation applied;
    int width = 0;
    SplitFactors factors;
    /// Qubit labels of v1 and v2, in the order their bits appear in each vector.
    std::vector<int> v1_labels;
    std::vector<int> v2_labels;
};

struct SplitSearch {
    std::optional<FoundSplit> found;
    /// Failing bipartitions examined before the search ended, in enumeration order.
    std::vector<CertificateEntry> witnesses;
    /// Bipartitions tested (the found one included).
    uint64_t splits_examined = 0;
    /// Distinct coefficient vectors tested: one per non-prefix bipartition,
    /// plus one shared by all prefix cuts.
    uint64_t vectors_examined = 0;
};

/// Scans bipartitions in enumerate_bipartitions order and returns the first
/// one whose (moved) coefficient vector splits. Requires n >= 2.
SplitSearch find_split(const PureState &state, const ScanOptions &options = {});

enum class Verdict { Product, GenuinelyEntangled };

const char *verdict_name(Verdict v);

struct Factor {
    QubitLabelSet qubits;
    /// Unit norm; qubit order follows `qubits` ascending.
    PureState state;
    /// True for a multi-qubit factor admitting no further split.
    bool entangled = false;
};

struct FactorizationReport {
    int num_qubits = 0;
    double tolerance = kDefaultTolerance;
    Verdict verdict = Verdict::Product;
    /// Finest factors sorted by smallest label. A genuinely entangled input
    /// yields a single entangled factor over all qubits.
    std::vector<Factor> factors;
    /// Every bipartition's failure witness; filled for GenuinelyEntangled only.
    std::vector<CertificateEntry> certificate;
    /// |reconstruct(report) - input / |input||.
    double residual = 0;
    /// Counters for the top-level scan.
    uint64_t splits_examined = 0;
    uint64_t vectors_examined = 0;
    /// Bipartitions tested over the whole recursion.
    uint64_t total_splits_examined = 0;
    double elapsed_seconds = 0;

    std::vector<QubitLabelSet> partition() const;
    /// "{1,2} ⊗ {3,4}".
    std::string partition_str() const;
};

/// Recursively splits the state into its finest tensor factorization.
FactorizationReport full_factorize(const PureState &state, const ScanOptions &options = {});

struct EntanglementCheck {
    bool genuinely_entangled = false;
    /// One entry per bipartition when genuinely entangled.
    std::vector<CertificateEntry> certificate;
    uint64_t splits_examined = 0;
};

EntanglementCheck is_genuinely_entangled(const PureState &state, const ScanOptions &options = {});

/// Tensors the factors and restores qubit order. Throws unless the verdict is Product.
PureState reconstruct(const FactorizationReport &report);

/// Tensors factors over disjoint label sets covering 1..n, then reorders the
/// qubits so label L lands at position L.
PureState assemble(std::span<const Factor> factors);

/// Reorders qubits so that the ones carrying `labels` (listed in current bit
/// order) appear in ascending label order.
PureState sort_qubits(const PureState &state, std::span<const int> labels);

}  // namespace qsep

#endif
