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

#include "qsep/factorizer.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "qsep/internal/block_kernels.h"

namespace qsep {

const char *verdict_name(Verdict v) {
    return v == Verdict::Product ? "PRODUCT" : "GENUINELY ENTANGLED";
}

namespace {

struct Attempt {
    SplitResult result;
    bool moved = false;
    int width = 0;
};

/// Tests one bipartition. `scratch` receives the moved amplitudes when the
/// cut is not a prefix of the unpermuted qubit order.
Attempt try_bipartition(
    const PureState &state, double norm, const Bipartition &b, std::vector<amp_t> &scratch, double tol) {
    Attempt a;
    int n = state.num_qubits();
    int w = b.prefix_width();
    std::span<const amp_t> data = state.amplitudes();
    if (w > 0) {
        a.width = w;
    } else {
        scratch.resize(state.dim());
        apply_into(b.mover, state.amplitudes(), scratch);
        data = scratch;
        a.moved = true;
        a.width = static_cast<int>(b.left.size());
    }
    a.result = internal::decompose_blocks(BlockMatrix(data, n, a.width), norm, tol);
    return a;
}

FoundSplit make_found(const Bipartition &b, size_t index, const Attempt &a) {
    int n = b.num_qubits;
    QubitPermutation applied = a.moved ? b.mover : QubitPermutation::identity(n);
    // Position q of the tested vector holds the qubit originally at applied^-1(q).
    QubitPermutation back = inverse(applied);
    std::vector<int> v1_labels, v2_labels;
    for (int q = 1; q <= n; q++) {
        (q <= a.width ? v1_labels : v2_labels).push_back(back(q));
    }
    return FoundSplit{b, index, std::move(applied), a.width, *a.result.factors, std::move(v1_labels),
                      std::move(v2_labels)};
}

SplitSearch scan_sequential(const PureState &state, const std::vector<Bipartition> &parts, double tol) {
    SplitSearch out;
    double norm = state.norm();
    std::vector<amp_t> scratch;
    bool prefix_vector_used = false;
    for (size_t k = 0; k < parts.size(); k++) {
        const auto &b = parts[k];
        Attempt a = try_bipartition(state, norm, b, scratch, tol);
        out.splits_examined++;
        if (a.moved) {
            out.vectors_examined++;
        } else if (!prefix_vector_used) {
            prefix_vector_used = true;
            out.vectors_examined++;
        }
        if (a.result.decomposable()) {
            out.found = make_found(b, k, a);
            return out;
        }
        out.witnesses.push_back(CertificateEntry{b, *a.result.witness});
    }
    return out;
}

SplitSearch scan_parallel(const PureState &state, const std::vector<Bipartition> &parts, double tol, unsigned threads) {
    double norm = state.norm();
    std::vector<std::optional<Attempt>> attempts(parts.size());
    std::atomic<size_t> next{0};
    std::atomic<size_t> best{std::numeric_limits<size_t>::max()};

    auto worker = [&] {
        std::vector<amp_t> scratch;
        while (true) {
            size_t k = next.fetch_add(1);
            if (k >= parts.size() || k > best.load()) {
                return;
            }
            Attempt a = try_bipartition(state, norm, parts[k], scratch, tol);
            if (a.result.decomposable()) {
                size_t cur = best.load();
                while (k < cur && !best.compare_exchange_weak(cur, k)) {
                }
            }
            attempts[k] = std::move(a);
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; t++) {
        pool.emplace_back(worker);
    }
    pool.clear();

    // Reduce in enumeration order so the outcome matches the sequential scan.
    SplitSearch out;
    bool prefix_vector_used = false;
    for (size_t k = 0; k < parts.size(); k++) {
        const auto &a = attempts[k];
        if (!a.has_value()) {
            break;
        }
        out.splits_examined++;
        if (a->moved) {
            out.vectors_examined++;
        } else if (!prefix_vector_used) {
            prefix_vector_used = true;
            out.vectors_examined++;
        }
        if (a->result.decomposable()) {
            out.found = make_found(parts[k], k, *a);
            return out;
        }
        out.witnesses.push_back(CertificateEntry{parts[k], *a->result.witness});
    }
    return out;
}

PureState factor_state(std::vector<amp_t> amps, size_t num_labels) {
    return PureState(static_cast<int>(num_labels), std::move(amps)).normalized();
}

}  // namespace

SplitSearch find_split(const PureState &state, const ScanOptions &options) {
    if (state.num_qubits() < 2) {
        throw std::invalid_argument("find_split needs at least 2 qubits");
    }
    auto parts = enumerate_bipartitions(state.num_qubits());
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    if (options.parallel && threads > 1) {
        return scan_parallel(state, parts, options.tol, threads);
    }
    return scan_sequential(state, parts, options.tol);
}

PureState sort_qubits(const PureState &state, std::span<const int> labels) {
    if (static_cast<int>(labels.size()) != state.num_qubits()) {
        throw std::invalid_argument("sort_qubits: one label per qubit required");
    }
    std::vector<int> sorted(labels.begin(), labels.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> mapping(labels.size());
    for (size_t p = 0; p < labels.size(); p++) {
        mapping[p] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), labels[p]) - sorted.begin()) + 1;
    }
    return apply(QubitPermutation(std::move(mapping)), state);
}

PureState assemble(std::span<const Factor> factors) {
    if (factors.empty()) {
        throw std::invalid_argument("assemble: no factors");
    }
    std::vector<PureState> states;
    std::vector<int> labels;
    for (const auto &f : factors) {
        if (static_cast<int>(f.qubits.size()) != f.state.num_qubits()) {
            throw std::invalid_argument("assemble: factor label count does not match its state");
        }
        states.push_back(f.state);
        labels.insert(labels.end(), f.qubits.begin(), f.qubits.end());
    }
    std::vector<int> check = labels;
    std::sort(check.begin(), check.end());
    for (size_t k = 0; k < check.size(); k++) {
        if (check[k] != static_cast<int>(k) + 1) {
            throw std::invalid_argument("assemble: factor labels must partition 1..n");
        }
    }
    return sort_qubits(tensor_all(states), labels);
}

std::vector<QubitLabelSet> FactorizationReport::partition() const {
    std::vector<QubitLabelSet> out;
    for (const auto &f : factors) {
        out.push_back(f.qubits);
    }
    return out;
}

std::string FactorizationReport::partition_str() const {
    std::string out;
    for (size_t k = 0; k < factors.size(); k++) {
        if (k) {
            out += " ⊗ ";
        }
        out += factors[k].qubits.str();
    }
    return out;
}

FactorizationReport full_factorize(const PureState &state, const ScanOptions &options) {
    auto start = std::chrono::steady_clock::now();
    FactorizationReport report;
    report.num_qubits = state.num_qubits();
    report.tolerance = options.tol;
    PureState unit = state.normalized();

    struct Pending {
        PureState state;
        std::vector<int> labels;  // ascending global labels, one per qubit
    };
    std::vector<int> all(state.num_qubits());
    std::iota(all.begin(), all.end(), 1);
    std::vector<Pending> work{{unit, all}};
    bool top = true;

    while (!work.empty()) {
        Pending cur = std::move(work.back());
        work.pop_back();
        if (cur.state.num_qubits() == 1) {
            report.factors.push_back(Factor{QubitLabelSet(cur.labels), cur.state, false});
            top = false;
            continue;
        }
        SplitSearch search = find_split(cur.state, options);
        report.total_splits_examined += search.splits_examined;
        if (top) {
            report.splits_examined = search.splits_examined;
            report.vectors_examined = search.vectors_examined;
        }
        if (!search.found) {
            if (top) {
                report.certificate = std::move(search.witnesses);
            }
            report.factors.push_back(Factor{QubitLabelSet(cur.labels), cur.state, true});
            top = false;
            continue;
        }
        top = false;
        const FoundSplit &f = *search.found;
        auto to_global = [&](const std::vector<int> &local) {
            std::vector<int> g;
            for (int q : local) {
                g.push_back(cur.labels[q - 1]);
            }
            return g;
        };
        std::vector<int> g1 = to_global(f.v1_labels);
        std::vector<int> g2 = to_global(f.v2_labels);
        PureState s1 = sort_qubits(factor_state(f.factors.v1, g1.size()), g1);
        PureState s2 = sort_qubits(factor_state(f.factors.v2, g2.size()), g2);
        std::sort(g1.begin(), g1.end());
        std::sort(g2.begin(), g2.end());
        work.push_back(Pending{std::move(s2), std::move(g2)});
        work.push_back(Pending{std::move(s1), std::move(g1)});
    }

    std::sort(report.factors.begin(), report.factors.end(),
              [](const Factor &a, const Factor &b) { return a.qubits.front() < b.qubits.front(); });
    bool entangled = state.num_qubits() >= 2 && report.factors.size() == 1;
    report.verdict = entangled ? Verdict::GenuinelyEntangled : Verdict::Product;

    PureState rebuilt = assemble(report.factors);
    double err = 0;
    for (size_t k = 0; k < rebuilt.dim(); k++) {
        err += std::norm(rebuilt[k] - unit[k]);
    }
    report.residual = std::sqrt(err);
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

EntanglementCheck is_genuinely_entangled(const PureState &state, const ScanOptions &options) {
    SplitSearch search = find_split(state, options);
    EntanglementCheck out;
    out.genuinely_entangled = !search.found.has_value();
    out.splits_examined = search.splits_examined;
    if (out.genuinely_entangled) {
        out.certificate = std::move(search.witnesses);
    }
    return out;
}

PureState reconstruct(const FactorizationReport &report) {
    if (report.verdict != Verdict::Product) {
        throw std::invalid_argument("reconstruct: report is not a product decomposition");
    }
    return assemble(report.factors);
}

}  // namespace qsep
