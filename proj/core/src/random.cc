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

#include "qsep/random.h"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qsep/factorizer.h"

namespace qsep {

PureState random_state(int n, std::mt19937_64 &rng) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("random_state: bad qubit count");
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<amp_t> v(uint64_t{1} << n);
    for (auto &a : v) {
        a = {gauss(rng), gauss(rng)};
    }
    return PureState(n, std::move(v)).normalized();
}

std::vector<QubitLabelSet> parse_partition(const std::string &text) {
    std::vector<QubitLabelSet> parts;
    std::stringstream outer(text);
    std::string part;
    while (std::getline(outer, part, '|')) {
        std::vector<int> labels;
        std::stringstream inner(part);
        std::string tok;
        while (std::getline(inner, tok, ',')) {
            tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
            if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit)) {
                throw std::invalid_argument("bad label '" + tok + "' in partition '" + text + "'");
            }
            labels.push_back(std::stoi(tok));
        }
        parts.emplace_back(std::move(labels));
    }
    if (parts.empty()) {
        throw std::invalid_argument("empty partition");
    }
    std::vector<int> all;
    for (const auto &p : parts) {
        all.insert(all.end(), p.begin(), p.end());
    }
    std::sort(all.begin(), all.end());
    for (size_t k = 0; k < all.size(); k++) {
        if (all[k] != static_cast<int>(k) + 1) {
            throw std::invalid_argument("partition '" + text + "' must cover 1..n exactly once");
        }
    }
    std::sort(parts.begin(), parts.end(), [](const auto &a, const auto &b) { return a.front() < b.front(); });
    return parts;
}

std::string partition_str(const std::vector<QubitLabelSet> &parts) {
    std::string out;
    for (size_t k = 0; k < parts.size(); k++) {
        if (k) {
            out += "|";
        }
        for (size_t j = 0; j < parts[k].size(); j++) {
            if (j) {
                out += ",";
            }
            out += std::to_string(parts[k][j]);
        }
    }
    return out;
}

ProductSample random_product(const std::vector<QubitLabelSet> &partition, std::mt19937_64 &rng) {
    std::vector<Factor> factors;
    for (const auto &part : partition) {
        factors.push_back(Factor{part, random_state(static_cast<int>(part.size()), rng), false});
    }
    std::vector<QubitLabelSet> sorted = partition;
    std::sort(sorted.begin(), sorted.end(), [](const auto &a, const auto &b) { return a.front() < b.front(); });
    return ProductSample{assemble(factors), std::move(sorted)};
}

std::vector<QubitLabelSet> random_partition(const std::vector<int> &sizes, std::mt19937_64 &rng) {
    int n = std::accumulate(sizes.begin(), sizes.end(), 0);
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    std::vector<QubitLabelSet> parts;
    auto it = labels.begin();
    for (int s : sizes) {
        parts.emplace_back(std::vector<int>(it, it + s));
        it += s;
    }
    std::sort(parts.begin(), parts.end(), [](const auto &a, const auto &b) { return a.front() < b.front(); });
    return parts;
}

namespace {

void partitions_into(int remaining, int max_part, std::vector<int> &cur, std::vector<std::vector<int>> &out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; p--) {
        cur.push_back(p);
        partitions_into(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> integer_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_into(n, n, cur, out);
    return out;
}

}  // namespace qsep
