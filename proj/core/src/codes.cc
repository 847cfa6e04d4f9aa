// Copyright 2026 The hamsurf Authors
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

#include "hamsurf/codes.h"

#include <string>

#include "hamsurf/errors.h"
#include "hamsurf/reference_logicals.h"

namespace hamsurf {

namespace {

// Beyond this the block length no longer fits comfortably in memory anyway.
constexpr int kMaxLevel = 12;

void check_level(int level) {
    if (level < 0 || level > kMaxLevel) {
        throw ParameterError("Hamming level " + std::to_string(level) + " outside [0, " +
                             std::to_string(kMaxLevel) + "]");
    }
}

}  // namespace

size_t hamming_block_length(int level) {
    check_level(level);
    return (size_t{1} << (level + 3)) - 1;
}

size_t hamming_logical_count(int level) {
    check_level(level);
    size_t r = static_cast<size_t>(level) + 3;
    return (size_t{1} << r) - 2 * r - 1;
}

BitMatrix hamming_check_matrix(int r) {
    if (r < 3) {
        throw ParameterError("hamming_check_matrix: r must be >= 3, got " + std::to_string(r));
    }
    check_level(r - 3);
    size_t n = (size_t{1} << r) - 1;
    BitMatrix h(static_cast<size_t>(r), n);
    for (size_t col = 0; col < n; col++) {
        size_t label = col + 1;
        for (int bit = 0; bit < r; bit++) {
            if ((label >> bit) & 1) {
                h.set(static_cast<size_t>(bit), col, true);
            }
        }
    }
    return h;
}

HammingLevelCode build_level_code(int level, LogicalBasis basis) {
    check_level(level);
    if (basis == LogicalBasis::reference && level > 2) {
        throw ParameterError("build_level_code: no reference logicals for level " + std::to_string(level));
    }
    HammingLevelCode code;
    code.level = level;
    code.r = level + 3;
    code.n = hamming_block_length(level);
    code.k = hamming_logical_count(level);
    code.k_stab = static_cast<size_t>(code.r);
    code.checks = hamming_check_matrix(code.r);
    if (basis == LogicalBasis::reference) {
        code.logicals = reference_logicals(code.r);
        return code;
    }

    // The classical Hamming code ker(H) contains its dual rowspace(H), so its
    // codeword generators lifted to X and Z operators contain both the
    // stabilizers and representatives of every logical operator.
    BitMatrix codewords = kernel_basis(code.checks);
    LogicalMatrix lm = extract_logicals(GeneratorSet::from_css_codewords(codewords));
    if (lm.k != code.k) {
        throw AlgorithmError("build_level_code: extracted " + std::to_string(lm.k) + " logicals, expected " +
                             std::to_string(code.k));
    }
    code.logicals = std::move(lm.z_logicals);
    code.x_logicals = std::move(lm.x_logicals);
    return code;
}

Syndrome syndrome(const BitMatrix &checks, const BitVector &error) {
    if (error.size() != checks.num_cols()) {
        throw DimensionError("syndrome: error length " + std::to_string(error.size()) + " != block length " +
                             std::to_string(checks.num_cols()));
    }
    return checks.multiply(error);
}

}  // namespace hamsurf
