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

#ifndef HAMSURF_CONCAT_H
#define HAMSURF_CONCAT_H

#include <cstddef>
#include <string>
#include <vector>

#include "hamsurf/codes.h"

namespace hamsurf {

enum class BaseKind {
    /// Level 0 is the [[7,1,3]] Hamming code on physical qubits.
    steane,
    /// Level 0 is replaced by distance-d planar surface codes.
    surface,
    /// No level-0 code: level 1 sits directly on physical qubits.
    bare,
};

struct BaseCode {
    BaseKind kind = BaseKind::steane;
    int distance = 0;

    static BaseCode steane() {
        return {BaseKind::steane, 0};
    }
    static BaseCode surface(int d) {
        return {BaseKind::surface, d};
    }
    static BaseCode bare() {
        return {BaseKind::bare, 0};
    }
    std::string name() const;
};

/// Register/block wiring of a concatenated Hamming code.
///
/// The decoder input is one bit per base register: a physical qubit for the
/// steane and bare bases, a surface-code logical qubit for the surface base.
/// A level-l register holds `register_width(l)` bits. At level l, each group of
/// N_l consecutive registers forms `register_width(l)` blocks; block b takes
/// bit b of every register in the group. Its K_l decoded logical bits land at
/// bits b*K_l .. b*K_l + K_l - 1 of the group's level-(l+1) register.
struct ConcatenationSchema {
    int top_level = 0;
    int first_level = 0;
    BaseCode base;
    /// Codes for levels first_level..top_level, in order.
    std::vector<HammingLevelCode> codes;

    size_t base_registers = 0;
    size_t physical_per_register = 1;
    size_t total_logical = 1;
    size_t total_physical = 0;

    const HammingLevelCode &code(int level) const;
    /// Number of level-l registers (inputs to the level-l blocks).
    size_t registers_at(int level) const;
    /// Bits per level-l register: the product of K_j over first_level <= j < level.
    size_t register_width(int level) const;
    size_t blocks_at(int level) const;
    /// Flat input-frame indices (register * width + bit) making up one block.
    std::vector<size_t> block_members(int level, size_t group, size_t block) const;
    /// Physical qubits per logical qubit of the base code alone.
    size_t base_overhead() const;
};

/// Steane base needs top_level >= 0; surface and bare need top_level >= 1 for
/// bare, >= 0 for surface (level 0 alone is a single surface block).
ConcatenationSchema build_schema(int top_level, BaseCode base, LogicalBasis basis = LogicalBasis::extracted);

struct OverheadRow {
    int d = 0;
    int level = 0;
    double overhead_exact = 0;
    long overhead_rounded = 0;
};

/// (d^2 + (d-1)^2) * prod_{l=1..level} N_l / K_l, and its nearest integer.
OverheadRow overhead(int d, int level);

/// Memory failure of k independent blocks that each fail with `single`.
double memory_failure_from_single(double single, size_t k);

}  // namespace hamsurf

#endif
