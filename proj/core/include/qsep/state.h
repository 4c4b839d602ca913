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

#ifndef QSEP_STATE_H
#define QSEP_STATE_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qsep {

using amp_t = std::complex<double>;

/// Largest qubit count a PureState may hold. Limited by 64-bit basis indices
/// and, in practice, by memory long before that.
constexpr int kMaxQubits = 40;

/// An n-qubit pure state stored as its coefficient vector.
///
/// Entry k is the amplitude of basis ket |k>, where the n-bit binary
/// expansion of k lists qubit 1 as the most significant bit. So the ket
/// strings |0...0>, |0...01>, ..., |1...1> appear in ascending index order.
///
/// Amplitudes are stored verbatim; the vector need not be normalized but
/// must be non-zero and finite.
class PureState {
   public:
    PureState(int num_qubits, std::vector<amp_t> amplitudes);

    int num_qubits() const {
        return num_qubits_;
    }
    size_t dim() const {
        return amplitudes_.size();
    }
    std::span<const amp_t> amplitudes() const {
        return amplitudes_;
    }
    const amp_t &operator[](size_t k) const {
        return amplitudes_[k];
    }

    double norm() const;
    /// Copy scaled to unit L2 norm.
    PureState normalized() const;

    bool operator==(const PureState &other) const = default;

    std::string str() const;

   private:
    int num_qubits_;
    std::vector<amp_t> amplitudes_;
};

/// A sorted, non-empty set of distinct 1-based qubit labels.
class QubitLabelSet {
   public:
    QubitLabelSet() = default;
    /// Sorts the input; throws on duplicates, non-positive labels, or empty input.
    explicit QubitLabelSet(std::vector<int> labels);
    QubitLabelSet(std::initializer_list<int> labels) : QubitLabelSet(std::vector<int>(labels)) {
    }

    /// {1, ..., n}.
    static QubitLabelSet range(int first, int last);

    size_t size() const {
        return labels_.size();
    }
    bool empty() const {
        return labels_.empty();
    }
    int front() const {
        return labels_.front();
    }
    int back() const {
        return labels_.back();
    }
    int operator[](size_t k) const {
        return labels_[k];
    }
    bool contains(int label) const;
    const std::vector<int> &labels() const {
        return labels_;
    }
    auto begin() const {
        return labels_.begin();
    }
    auto end() const {
        return labels_.end();
    }

    /// Labels of {1..n} not in this set.
    QubitLabelSet complement(int n) const;

    bool operator==(const QubitLabelSet &other) const = default;
    auto operator<=>(const QubitLabelSet &other) const = default;

    /// "{1,3}".
    std::string str() const;

   private:
    std::vector<int> labels_;
};

/// Validating constructor; amplitudes are kept verbatim (no normalization).
PureState make_state(int num_qubits, std::vector<amp_t> amplitudes);

/// Kronecker product: amplitude (j * 2^nb + k) of the result is a[j] * b[k].
/// Qubits of `a` come first.
PureState tensor(const PureState &a, const PureState &b);

/// Tensor of a list of states, left to right.
PureState tensor_all(std::span<const PureState> states);

/// Computational basis ket |index> on n qubits.
PureState basis_state(int num_qubits, uint64_t index);

PureState ghz(int n);
PureState w(int n);
/// Equal superposition of all n-qubit basis kets of Hamming weight `weight`.
PureState dicke(int weight, int n);
/// Normalized dicke(1, n) + dicke(n - 1, n).
PureState dw(int n);
/// Normalized ghz(n) + w(n).
PureState ghz_plus_w(int n);
/// (|001> + |010> + |100> + |111>) / 2.
PureState zeta3();

/// Normalized sum of two states on the same qubit count.
PureState normalized_sum(const PureState &a, const PureState &b);

}  // namespace qsep

#endif
