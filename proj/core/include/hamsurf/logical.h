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

#ifndef HAMSURF_LOGICAL_H
#define HAMSURF_LOGICAL_H

#include <cstddef>
#include <vector>

#include "hamsurf/gf2.h"

namespace hamsurf {

/// A Pauli operator up to phase, in symplectic (x | z) form.
struct Pauli {
    BitVector x;
    BitVector z;

    static Pauli x_type(const BitVector &support);
    static Pauli z_type(const BitVector &support);

    size_t num_qubits() const {
        return x.size();
    }
    bool is_identity() const {
        return x.none() && z.none();
    }
    bool is_x_type() const {
        return z.none() && x.any();
    }
    bool is_z_type() const {
        return x.none() && z.any();
    }
    /// Product up to phase.
    Pauli &operator*=(const Pauli &other);
    bool operator==(const Pauli &other) const = default;
};

/// True when the two operators anticommute: x1.z2 + z1.x2 = 1 mod 2.
bool anticommutes(const Pauli &a, const Pauli &b);

/// Generators awaiting symplectic processing.
struct GeneratorSet {
    size_t num_qubits = 0;
    std::vector<Pauli> generators;

    /// X-type copies of each codeword generator, followed by Z-type copies.
    static GeneratorSet from_css_codewords(const BitMatrix &codeword_generators);
};

/// Output of symplectic processing: commuting singletons and anticommuting pairs.
struct ProcessedGenerators {
    std::vector<Pauli> singletons;
    std::vector<std::pair<Pauli, Pauli>> pairs;
};

/// Repeatedly takes the first remaining generator g1. If it commutes with all
/// others it is set aside alone. Otherwise it is paired with the first g_j it
/// anticommutes with, and every other g_i is multiplied by g1 (if it
/// anticommutes with g_j) and by g_j (if it anticommutes with g1), so that the
/// remainder commutes with both.
///
/// Throws AlgorithmError if a generator collapses to the identity (the input
/// was linearly dependent) or the qubit counts disagree.
ProcessedGenerators symplectic_process(const GeneratorSet &set);

struct LogicalMatrix {
    size_t n = 0;
    size_t k = 0;
    /// Z-type logical supports, one per row. Qubit i has flipped iff L_i . residual = 1.
    BitMatrix z_logicals;
    /// X-type partners: x_logicals row i anticommutes with z_logicals row i only.
    BitMatrix x_logicals;
};

/// Runs symplectic_process and keeps the anticommuting pairs, dropping the
/// singletons (stabilizers). Pairs must be one X-type and one Z-type operator;
/// anything else throws AlgorithmError.
LogicalMatrix extract_logicals(const GeneratorSet &set);

/// H L^T = 0, no row of L in rowspace(H), and rank(H ; L) = rank(H) + rows(L).
bool validate_logicals(const BitMatrix &checks, const BitMatrix &logicals);

/// True when the rows of `a` and `b` span the same space modulo rowspace(checks).
bool coset_equivalent(const BitMatrix &checks, const BitMatrix &a, const BitMatrix &b);

/// Product of K_j for j < level: the number of logical qubits in one register
/// that feeds the level-`level` blocks (and the number of such blocks).
size_t qubits_per_register(int level);

/// Flattens (logical i of block k) at `level` into the register-local index
/// (k - 1) * K_level + i. All indices are 1-based.
size_t relabel(int level, size_t logical_index, size_t block_index);

struct BlockLogical {
    size_t logical_index;
    size_t block_index;
    bool operator==(const BlockLogical &) const = default;
};
BlockLogical unrelabel(int level, size_t register_index);

}  // namespace hamsurf

#endif
