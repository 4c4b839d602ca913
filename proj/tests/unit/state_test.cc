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

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "../test_util.h"
#include "qsep/permutation.h"

using namespace qsep;
using qsep::testing::kron;
using qsep::testing::random_vector;

TEST(make_state, stores_amplitudes_verbatim) {
    PureState s = make_state(2, {1, 0, 0, 0});
    ASSERT_EQ(s.num_qubits(), 2);
    ASSERT_EQ(s.dim(), 4u);
    ASSERT_EQ(s[0], amp_t(1));
    ASSERT_EQ(s, basis_state(2, 0));

    std::mt19937_64 rng(11);
    auto v = random_vector(8, rng);
    PureState r = make_state(3, v);
    for (size_t k = 0; k < 8; k++) {
        ASSERT_EQ(r[k], v[k]);
    }
    // Not normalized.
    ASSERT_NE(make_state(1, {3, 4}).norm(), 1.0);
    ASSERT_DOUBLE_EQ(make_state(1, {3, 4}).norm(), 5.0);
}

TEST(make_state, rejects_bad_input) {
    ASSERT_THROW(make_state(2, {1, 0, 0}), std::invalid_argument);
    ASSERT_THROW(make_state(2, {0, 0, 0, 0}), std::invalid_argument);
    ASSERT_THROW(make_state(0, {1}), std::invalid_argument);
    ASSERT_THROW(make_state(1, {NAN, 1}), std::invalid_argument);
    ASSERT_THROW(make_state(1, {INFINITY, 1}), std::invalid_argument);
}

TEST(tensor, two_single_qubits) {
    amp_t a(0.3, 0.1), b(-0.2, 0.7), c(0.5, -0.5), d(0.9, 0.0);
    PureState t = tensor(make_state(1, {a, b}), make_state(1, {c, d}));
    ASSERT_EQ(t.num_qubits(), 2);
    ASSERT_EQ(t[0], a * c);
    ASSERT_EQ(t[1], a * d);
    ASSERT_EQ(t[2], b * c);
    ASSERT_EQ(t[3], b * d);
}

TEST(tensor, zero_ket_prepends_zero_bit) {
    std::mt19937_64 rng(3);
    PureState s = make_state(3, random_vector(8, rng));
    PureState t = tensor(basis_state(1, 0), s);
    ASSERT_EQ(t.num_qubits(), 4);
    for (size_t k = 0; k < 8; k++) {
        ASSERT_EQ(t[k], s[k]);
        ASSERT_EQ(t[k + 8], amp_t(0));
    }
}

TEST(tensor, matches_kronecker_oracle_and_is_associative) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; trial++) {
        int na = 1 + trial % 3, nb = 1 + (trial / 3) % 3, nc = 1 + trial % 2;
        PureState a = make_state(na, random_vector(size_t{1} << na, rng));
        PureState b = make_state(nb, random_vector(size_t{1} << nb, rng));
        PureState c = make_state(nc, random_vector(size_t{1} << nc, rng));
        PureState ab = tensor(a, b);
        auto expected = kron(a.amplitudes(), b.amplitudes());
        ASSERT_EQ(ab.num_qubits(), na + nb);
        for (size_t k = 0; k < expected.size(); k++) {
            ASSERT_EQ(ab[k], expected[k]);
        }
        // Each entry is a single product of three factors either way, but the
        // multiplication order differs, so compare to rounding.
        PureState left = tensor(ab, c);
        PureState right = tensor(a, tensor(b, c));
        for (size_t k = 0; k < left.dim(); k++) {
            ASSERT_LE(std::abs(left[k] - right[k]), 1e-14 * (1 + std::abs(left[k])));
        }
    }
}

TEST(named_states, ghz_w_zeta_amplitudes) {
    double s2 = 1 / std::sqrt(2.0), s3 = 1 / std::sqrt(3.0);
    PureState g = ghz(3);
    for (size_t k = 0; k < 8; k++) {
        ASSERT_NEAR(std::abs(g[k] - amp_t(k == 0 || k == 7 ? s2 : 0)), 0, 1e-15) << k;
    }
    PureState w3 = w(3);
    for (size_t k = 0; k < 8; k++) {
        ASSERT_NEAR(std::abs(w3[k] - amp_t(k == 1 || k == 2 || k == 4 ? s3 : 0)), 0, 1e-15) << k;
    }
    PureState z = zeta3();
    for (size_t k = 0; k < 8; k++) {
        ASSERT_EQ(z[k], amp_t(k == 1 || k == 2 || k == 4 || k == 7 ? 0.5 : 0)) << k;
    }
    ASSERT_EQ(z.norm(), 1.0);
}

TEST(named_states, dicke_extremes_and_dw) {
    ASSERT_EQ(dicke(0, 4), basis_state(4, 0));
    ASSERT_EQ(dicke(4, 4), basis_state(4, 15));
    PureState d = dicke(2, 4);
    int nonzero = 0;
    for (size_t k = 0; k < 16; k++) {
        if (d[k] != amp_t(0)) {
            nonzero++;
            ASSERT_EQ(__builtin_popcountll(k), 2);
            ASSERT_NEAR(d[k].real(), 1 / std::sqrt(6.0), 1e-15);
        }
    }
    ASSERT_EQ(nonzero, 6);

    // dw(4): weight-1 and weight-3 kets, eight in all, equal amplitude.
    PureState x = dw(4);
    for (size_t k = 0; k < 16; k++) {
        int h = __builtin_popcountll(k);
        ASSERT_NEAR(x[k].real(), h == 1 || h == 3 ? 1 / std::sqrt(8.0) : 0, 1e-15);
    }
    // dw(3) = |1,3> + |2,3> covers all kets of weight 1 and 2.
    PureState y = dw(3);
    ASSERT_NEAR(y[0].real(), 0, 0);
    ASSERT_NEAR(y[7].real(), 0, 0);
    ASSERT_NEAR(y[3].real(), 1 / std::sqrt(6.0), 1e-15);
}

TEST(named_states, unit_norm) {
    for (int n = 2; n <= 10; n++) {
        ASSERT_NEAR(ghz(n).norm(), 1, 1e-12);
        ASSERT_NEAR(w(n).norm(), 1, 1e-12);
        ASSERT_NEAR(ghz_plus_w(n).norm(), 1, 1e-12);
        for (int i = 0; i <= n; i++) {
            ASSERT_NEAR(dicke(i, n).norm(), 1, 1e-12);
        }
        if (n >= 3) {
            ASSERT_NEAR(dw(n).norm(), 1, 1e-12);
        }
    }
    ASSERT_NEAR(zeta3().norm(), 1, 1e-12);
}

TEST(named_states, parameter_ranges) {
    ASSERT_THROW(ghz(1), std::invalid_argument);
    ASSERT_THROW(w(1), std::invalid_argument);
    ASSERT_THROW(dw(2), std::invalid_argument);
    ASSERT_THROW(dicke(-1, 3), std::invalid_argument);
    ASSERT_THROW(dicke(4, 3), std::invalid_argument);
    ASSERT_THROW(dicke(0, 0), std::invalid_argument);
    ASSERT_THROW(ghz_plus_w(1), std::invalid_argument);
}

TEST(named_states, zeta3_is_permutation_invariant) {
    PureState z = zeta3();
    for (const auto &m : qsep::testing::all_mappings(3)) {
        ASSERT_EQ(apply(QubitPermutation(m), z), z);
    }
}

TEST(qubit_label_set, canonical_form_and_errors) {
    QubitLabelSet s{3, 1, 2};
    ASSERT_EQ(s.labels(), (std::vector<int>{1, 2, 3}));
    ASSERT_EQ(s.str(), "{1,2,3}");
    ASSERT_EQ(QubitLabelSet({2, 4}).complement(5), QubitLabelSet({1, 3, 5}));
    ASSERT_TRUE(s.contains(2));
    ASSERT_FALSE(s.contains(4));
    ASSERT_THROW(QubitLabelSet(std::vector<int>{}), std::invalid_argument);
    ASSERT_THROW(QubitLabelSet({1, 1}), std::invalid_argument);
    ASSERT_THROW(QubitLabelSet({0, 1}), std::invalid_argument);
}

TEST(tensor, exactly_associative_on_dyadic_amplitudes) {
    PureState a = make_state(1, {1, amp_t(0, -2)});
    PureState b = make_state(2, {0.5, -1, amp_t(3, 1), 0.25});
    PureState c = make_state(1, {amp_t(-1, 1), 2});
    ASSERT_EQ(tensor(tensor(a, b), c), tensor(a, tensor(b, c)));
}
