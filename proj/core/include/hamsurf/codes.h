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

#ifndef HAMSURF_CODES_H
#define HAMSURF_CODES_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hamsurf/gf2.h"
#include "hamsurf/logical.h"

namespace hamsurf {

/// n = 2^(l+3) - 1: block length of the level-l quantum Hamming code.
size_t hamming_block_length(int level);
/// k = 2^(l+3) - 2(l+3) - 1: logical qubits per level-l block.
size_t hamming_logical_count(int level);

/// r x (2^r - 1) matrix whose column j (0-based) is the binary expansion of
/// j + 1, least significant bit in row 0. The syndrome of a single flip on
/// qubit q (1-based) therefore reads as the integer q.
BitMatrix hamming_check_matrix(int r);

/// The [[2^r - 1, 2^r - 2r - 1, 3]] quantum Hamming code used at one
/// concatenation level, with r = level + 3.
struct HammingLevelCode {
    int level = 0;
    int r = 3;
    size_t n = 7;
    size_t k = 1;
    /// Stabilizer generators per sector (= r).
    size_t k_stab = 3;
    BitMatrix checks;
    /// Z-type logical supports; row i detects a flip of logical qubit i.
    BitMatrix logicals;
    /// Matching X-type logical supports.
    BitMatrix x_logicals;
};

/// Where a level code's logical operators come from. `extracted` runs the
/// symplectic extraction; `reference` uses the tabulated bases (levels 0..2,
/// Z side only, x_logicals left empty). Any-failure statistics are the same in
/// both; per-qubit statistics are basis dependent.
enum class LogicalBasis { extracted, reference };

HammingLevelCode build_level_code(int level, LogicalBasis basis = LogicalBasis::extracted);

/// s = H e. Bit i is 1 iff check i anticommutes with the error.
using Syndrome = BitVector;
Syndrome syndrome(const BitMatrix &checks, const BitVector &error);

/// Planar (unrotated) surface code, bit-flip sector only.
///
/// Sites live on a (2d-1) x (2d-1) grid. Data qubits sit at (row, col) with
/// row + col even. Z checks sit at (even row, odd col) and detect X errors;
/// X checks sit at (odd row, even col). The left (col 0) and right
/// (col 2d-2) edges are the rough boundaries where Z-check strings end.
struct SurfaceLattice {
    int d = 3;
    size_t n_data = 13;
    struct Site {
        int row;
        int col;
    };
    std::vector<Site> data_sites;
    std::vector<Site> check_sites;
    /// Z-check supports over data qubits.
    std::vector<std::vector<size_t>> plaquettes;
    /// X-check supports over data qubits (used only to verify logical_z).
    std::vector<std::vector<size_t>> stars;
    /// Z checks touched by each data qubit (one entry on a boundary, else two).
    std::vector<std::vector<size_t>> checks_of_data;
    /// The Z logical: the data qubits along the left edge.
    BitVector logical_z;

    /// The two rough boundaries act as virtual matching nodes.
    enum Boundary : uint8_t { left = 0, right = 1 };

    /// Pairwise check-to-check path lengths, row-major n_checks x n_checks.
    std::vector<uint32_t> dist;
    /// Path length from each check to its nearest rough boundary.
    std::vector<uint32_t> boundary_dist;
    /// Which boundary is nearest; ties go to the left edge.
    std::vector<Boundary> nearest_boundary;

    size_t num_checks() const {
        return check_sites.size();
    }
    uint32_t distance(size_t a, size_t b) const {
        return dist[a * check_sites.size() + b];
    }
    BitMatrix check_matrix() const;
    /// Data qubit at a grid site, or -1 when the site is not a data qubit.
    long data_index(int row, int col) const;

   private:
    friend SurfaceLattice build_surface(int, bool);
    std::vector<long> data_index_of_site_;
};

/// Throws ParameterError unless d >= 3 is odd; with allow_even, any d >= 2.
SurfaceLattice build_surface(int d, bool allow_even = false);

/// d^2 + (d-1)^2.
size_t surface_data_count(int d);

}  // namespace hamsurf

#endif
