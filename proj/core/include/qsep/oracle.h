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

#ifndef QSEP_ORACLE_H
#define QSEP_ORACLE_H

#include <cstddef>
#include <vector>

#include "qsep/permutation.h"
#include "qsep/state.h"

namespace qsep::oracle {

/// Coefficients reshaped into a 2^width x 2^(n - width) matrix, row-major:
/// entry (j, k) is c[j * cols + k].
class CoefficientMatrix {
   public:
    CoefficientMatrix(size_t rows, size_t cols, std::vector<amp_t> entries);

    /// Reshape of `state` after moving the bipartition's left side to the front.
    static CoefficientMatrix from_cut(const PureState &state, const Bipartition &cut);
    static CoefficientMatrix from_prefix(const PureState &state, int width);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    const amp_t &operator()(size_t j, size_t k) const {
        return entries_[j * cols_ + k];
    }
    /// Frobenius norm.
    double norm() const;

   private:
    size_t rows_;
    size_t cols_;
    std::vector<amp_t> entries_;
};

/// True iff every 2x2 minor m(j,k) m(j',k') - m(j,k') m(j',k) is within
/// tol * |m|^2 of zero, i.e. the matrix has rank one.
bool minor_test(const CoefficientMatrix &m, double tol);

/// Largest |2x2 minor| / |m|^2.
double max_minor(const CoefficientMatrix &m);

/// Genuinely entangled iff minor_test fails at every canonical bipartition.
bool oracle_verdict(const PureState &state, double tol);

}  // namespace qsep::oracle

#endif
