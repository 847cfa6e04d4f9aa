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

#include "hamsurf/logical.h"

#include <string>

#include "hamsurf/codes.h"
#include "hamsurf/errors.h"

namespace hamsurf {

Pauli Pauli::x_type(const BitVector &support) {
    return Pauli{support, BitVector(support.size())};
}

Pauli Pauli::z_type(const BitVector &support) {
    return Pauli{BitVector(support.size()), support};
}

Pauli &Pauli::operator*=(const Pauli &other) {
    x ^= other.x;
    z ^= other.z;
    return *this;
}

bool anticommutes(const Pauli &a, const Pauli &b) {
    return parity_dot(a.x, b.z) != parity_dot(a.z, b.x);
}

GeneratorSet GeneratorSet::from_css_codewords(const BitMatrix &codeword_generators) {
    GeneratorSet set;
    set.num_qubits = codeword_generators.num_cols();
    for (const auto &g : codeword_generators.rows()) {
        set.generators.push_back(Pauli::x_type(g));
    }
    for (const auto &g : codeword_generators.rows()) {
        set.generators.push_back(Pauli::z_type(g));
    }
    return set;
}

ProcessedGenerators symplectic_process(const GeneratorSet &set) {
    std::vector<Pauli> remaining = set.generators;
    for (const auto &g : remaining) {
        if (g.x.size() != set.num_qubits || g.z.size() != set.num_qubits) {
            throw AlgorithmError("symplectic_process: generator qubit count mismatch");
        }
    }

    ProcessedGenerators out;
    while (!remaining.empty()) {
        if (remaining.front().is_identity()) {
            throw AlgorithmError("symplectic_process: generators are linearly dependent");
        }
        size_t partner = 0;
        for (size_t j = 1; j < remaining.size(); j++) {
            if (anticommutes(remaining[0], remaining[j])) {
                partner = j;
                break;
            }
        }
        if (partner == 0) {
            out.singletons.push_back(std::move(remaining.front()));
            remaining.erase(remaining.begin());
            continue;
        }

        const Pauli first = remaining[0];
        const Pauli second = remaining[partner];
        for (size_t i = 1; i < remaining.size(); i++) {
            if (i == partner) {
                continue;
            }
            bool with_first = anticommutes(remaining[i], first);
            bool with_second = anticommutes(remaining[i], second);
            if (with_second) {
                remaining[i] *= first;
            }
            if (with_first) {
                remaining[i] *= second;
            }
        }
        out.pairs.emplace_back(first, second);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(partner));
        remaining.erase(remaining.begin());
    }
    return out;
}

LogicalMatrix extract_logicals(const GeneratorSet &set) {
    ProcessedGenerators processed = symplectic_process(set);
    LogicalMatrix out;
    out.n = set.num_qubits;
    out.k = processed.pairs.size();
    out.z_logicals = BitMatrix(0, set.num_qubits);
    out.x_logicals = BitMatrix(0, set.num_qubits);
    for (const auto &[a, b] : processed.pairs) {
        if (a.is_x_type() && b.is_z_type()) {
            out.x_logicals.append_row(a.x);
            out.z_logicals.append_row(b.z);
        } else if (a.is_z_type() && b.is_x_type()) {
            out.x_logicals.append_row(b.x);
            out.z_logicals.append_row(a.z);
        } else {
            throw AlgorithmError("extract_logicals: processed pair is not an X/Z pair (non-CSS input)");
        }
    }
    return out;
}

bool validate_logicals(const BitMatrix &checks, const BitMatrix &logicals) {
    if (checks.num_cols() != logicals.num_cols()) {
        throw DimensionError(
            "validate_logicals: column counts differ (" + std::to_string(checks.num_cols()) + " vs " +
            std::to_string(logicals.num_cols()) + ")");
    }
    if (!checks.gram(logicals).is_zero()) {
        return false;
    }
    for (const auto &row : logicals.rows()) {
        if (in_row_space(checks, row)) {
            return false;
        }
    }
    return rank(checks.stacked(logicals)) == rank(checks) + logicals.num_rows();
}

bool coset_equivalent(const BitMatrix &checks, const BitMatrix &a, const BitMatrix &b) {
    if (a.num_cols() != checks.num_cols() || b.num_cols() != checks.num_cols()) {
        throw DimensionError("coset_equivalent: column counts differ");
    }
    BitMatrix with_a = checks.stacked(a);
    BitMatrix with_b = checks.stacked(b);
    for (const auto &row : b.rows()) {
        if (!in_row_space(with_a, row)) {
            return false;
        }
    }
    for (const auto &row : a.rows()) {
        if (!in_row_space(with_b, row)) {
            return false;
        }
    }
    return true;
}

size_t qubits_per_register(int level) {
    if (level < 0) {
        throw ParameterError("qubits_per_register: negative level");
    }
    size_t product = 1;
    for (int j = 0; j < level; j++) {
        product *= hamming_logical_count(j);
    }
    return product;
}

size_t relabel(int level, size_t logical_index, size_t block_index) {
    size_t k_level = hamming_logical_count(level);
    size_t blocks = qubits_per_register(level);
    if (logical_index < 1 || logical_index > k_level) {
        throw IndexError(
            "relabel: logical index " + std::to_string(logical_index) + " outside [1, " + std::to_string(k_level) +
            "]");
    }
    if (block_index < 1 || block_index > blocks) {
        throw IndexError(
            "relabel: block index " + std::to_string(block_index) + " outside [1, " + std::to_string(blocks) + "]");
    }
    return (block_index - 1) * k_level + logical_index;
}

BlockLogical unrelabel(int level, size_t register_index) {
    size_t k_level = hamming_logical_count(level);
    size_t total = k_level * qubits_per_register(level);
    if (register_index < 1 || register_index > total) {
        throw IndexError(
            "unrelabel: register index " + std::to_string(register_index) + " outside [1, " + std::to_string(total) +
            "]");
    }
    return {(register_index - 1) % k_level + 1, (register_index - 1) / k_level + 1};
}

}  // namespace hamsurf
