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

#include "qsep/oracle.h"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace qsep::oracle {

CoefficientMatrix::CoefficientMatrix(size_t rows, size_t cols, std::vector<amp_t> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ < 1 || cols_ < 1) {
        throw std::invalid_argument("coefficient matrix needs at least one row and one column");
    }
    if (entries_.size() != rows_ * cols_) {
        throw std::invalid_argument("coefficient matrix entry count does not match its shape");
    }
}

CoefficientMatrix CoefficientMatrix::from_prefix(const PureState &state, int width) {
    int n = state.num_qubits();
    if (width < 1 || width > n - 1) {
        throw std::invalid_argument("cut width must be in [1, n-1]");
    }
    std::vector<amp_t> e(state.amplitudes().begin(), state.amplitudes().end());
    return CoefficientMatrix(size_t{1} << width, size_t{1} << (n - width), std::move(e));
}

CoefficientMatrix CoefficientMatrix::from_cut(const PureState &state, const Bipartition &cut) {
    // Gathers bits directly from labels rather than going through QubitPermutation,
    // so the oracle stays independent of the permutation code it checks.
    int n = state.num_qubits();
    if (cut.num_qubits != n) {
        throw std::invalid_argument("cut and state disagree on qubit count");
    }
    auto gather = [n](uint64_t index, const QubitLabelSet &labels) {
        uint64_t out = 0;
        for (int label : labels) {
            out = (out << 1) | ((index >> (n - label)) & 1);
        }
        return out;
    };
    size_t rows = size_t{1} << cut.left.size();
    size_t cols = size_t{1} << cut.right.size();
    std::vector<amp_t> e(rows * cols);
    for (uint64_t x = 0; x < state.dim(); x++) {
        e[gather(x, cut.left) * cols + gather(x, cut.right)] = state[x];
    }
    return CoefficientMatrix(rows, cols, std::move(e));
}

double CoefficientMatrix::norm() const {
    double acc = 0;
    for (const auto &x : entries_) {
        acc += std::norm(x);
    }
    return std::sqrt(acc);
}

double max_minor(const CoefficientMatrix &m) {
    double best = 0;
    for (size_t j = 0; j < m.rows(); j++) {
        for (size_t j2 = j + 1; j2 < m.rows(); j2++) {
            for (size_t k = 0; k < m.cols(); k++) {
                for (size_t k2 = k + 1; k2 < m.cols(); k2++) {
                    double d = std::abs(m(j, k) * m(j2, k2) - m(j, k2) * m(j2, k));
                    best = std::max(best, d);
                }
            }
        }
    }
    double nn = m.norm();
    return nn == 0 ? 0 : best / (nn * nn);
}

bool minor_test(const CoefficientMatrix &m, double tol) {
    return max_minor(m) <= tol;
}

bool oracle_verdict(const PureState &state, double tol) {
    if (state.num_qubits() < 2) {
        throw std::invalid_argument("oracle_verdict needs at least 2 qubits");
    }
    for (const auto &cut : enumerate_bipartitions(state.num_qubits())) {
        if (minor_test(CoefficientMatrix::from_cut(state, cut), tol)) {
            return false;
        }
    }
    return true;
}

}  // namespace qsep::oracle
