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

#include "qsep/state.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qsep {

PureState::PureState(int num_qubits, std::vector<amp_t> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    if (num_qubits_ < 1 || num_qubits_ > kMaxQubits) {
        throw std::invalid_argument("qubit count must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                                    std::to_string(num_qubits_));
    }
    if (amplitudes_.size() != (uint64_t{1} << num_qubits_)) {
        throw std::invalid_argument("expected " + std::to_string(uint64_t{1} << num_qubits_) +
                                    " amplitudes for " + std::to_string(num_qubits_) + " qubits, got " +
                                    std::to_string(amplitudes_.size()));
    }
    bool any_nonzero = false;
    for (const auto &a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("amplitudes must be finite");
        }
        any_nonzero |= a != amp_t{0};
    }
    if (!any_nonzero) {
        throw std::invalid_argument("the zero vector is not a state");
    }
}

double PureState::norm() const {
    double acc = 0;
    for (const auto &a : amplitudes_) {
        acc += std::norm(a);
    }
    return std::sqrt(acc);
}

PureState PureState::normalized() const {
    double inv = 1.0 / norm();
    std::vector<amp_t> out(amplitudes_);
    for (auto &a : out) {
        a *= inv;
    }
    return PureState(num_qubits_, std::move(out));
}

std::string PureState::str() const {
    std::stringstream ss;
    ss << "PureState(n=" << num_qubits_ << ", [";
    for (size_t k = 0; k < amplitudes_.size(); k++) {
        if (k) {
            ss << ", ";
        }
        ss << amplitudes_[k];
    }
    ss << "])";
    return ss.str();
}

QubitLabelSet::QubitLabelSet(std::vector<int> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) {
        throw std::invalid_argument("qubit label set must be non-empty");
    }
    std::sort(labels_.begin(), labels_.end());
    if (labels_.front() < 1) {
        throw std::invalid_argument("qubit labels are 1-based");
    }
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
        throw std::invalid_argument("duplicate qubit label");
    }
}

QubitLabelSet QubitLabelSet::range(int first, int last) {
    std::vector<int> v;
    for (int k = first; k <= last; k++) {
        v.push_back(k);
    }
    return QubitLabelSet(std::move(v));
}

bool QubitLabelSet::contains(int label) const {
    return std::binary_search(labels_.begin(), labels_.end(), label);
}

QubitLabelSet QubitLabelSet::complement(int n) const {
    std::vector<int> v;
    for (int k = 1; k <= n; k++) {
        if (!contains(k)) {
            v.push_back(k);
        }
    }
    return QubitLabelSet(std::move(v));
}

std::string QubitLabelSet::str() const {
    std::string out = "{";
    for (size_t k = 0; k < labels_.size(); k++) {
        if (k) {
            out += ",";
        }
        out += std::to_string(labels_[k]);
    }
    return out + "}";
}

PureState make_state(int num_qubits, std::vector<amp_t> amplitudes) {
    return PureState(num_qubits, std::move(amplitudes));
}

PureState tensor(const PureState &a, const PureState &b) {
    if (a.num_qubits() + b.num_qubits() > kMaxQubits) {
        throw std::invalid_argument("tensor product exceeds the qubit limit");
    }
    std::vector<amp_t> out;
    out.reserve(a.dim() * b.dim());
    for (const auto &x : a.amplitudes()) {
        for (const auto &y : b.amplitudes()) {
            out.push_back(x * y);
        }
    }
    return PureState(a.num_qubits() + b.num_qubits(), std::move(out));
}

PureState tensor_all(std::span<const PureState> states) {
    if (states.empty()) {
        throw std::invalid_argument("tensor_all needs at least one state");
    }
    PureState acc = states[0];
    for (size_t k = 1; k < states.size(); k++) {
        acc = tensor(acc, states[k]);
    }
    return acc;
}

PureState basis_state(int num_qubits, uint64_t index) {
    if (num_qubits < 1 || num_qubits > kMaxQubits || index >= (uint64_t{1} << num_qubits)) {
        throw std::invalid_argument("basis index out of range");
    }
    std::vector<amp_t> v(uint64_t{1} << num_qubits);
    v[index] = 1;
    return PureState(num_qubits, std::move(v));
}

PureState ghz(int n) {
    if (n < 2 || n > kMaxQubits) {
        throw std::invalid_argument("ghz requires n >= 2");
    }
    std::vector<amp_t> v(uint64_t{1} << n);
    v.front() = v.back() = M_SQRT1_2;
    return PureState(n, std::move(v));
}

PureState w(int n) {
    if (n < 2) {
        throw std::invalid_argument("w requires n >= 2");
    }
    return dicke(1, n);
}

PureState dicke(int weight, int n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("dicke requires 1 <= n <= " + std::to_string(kMaxQubits));
    }
    if (weight < 0 || weight > n) {
        throw std::invalid_argument("dicke weight must be in [0, n]");
    }
    std::vector<amp_t> v(uint64_t{1} << n);
    size_t count = 0;
    for (uint64_t k = 0; k < v.size(); k++) {
        if (std::popcount(k) == weight) {
            v[k] = 1;
            count++;
        }
    }
    double s = 1.0 / std::sqrt(static_cast<double>(count));
    for (auto &a : v) {
        a *= s;
    }
    return PureState(n, std::move(v));
}

PureState normalized_sum(const PureState &a, const PureState &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("normalized_sum: qubit count mismatch");
    }
    std::vector<amp_t> v(a.dim());
    for (size_t k = 0; k < v.size(); k++) {
        v[k] = a[k] + b[k];
    }
    return PureState(a.num_qubits(), std::move(v)).normalized();
}

PureState dw(int n) {
    if (n < 3) {
        throw std::invalid_argument("dw requires n >= 3");
    }
    return normalized_sum(dicke(1, n), dicke(n - 1, n));
}

PureState ghz_plus_w(int n) {
    if (n < 2) {
        throw std::invalid_argument("ghz_plus_w requires n >= 2");
    }
    return normalized_sum(ghz(n), w(n));
}

PureState zeta3() {
    std::vector<amp_t> v(8);
    v[1] = v[2] = v[4] = v[7] = 0.5;
    return PureState(3, std::move(v));
}

}  // namespace qsep
