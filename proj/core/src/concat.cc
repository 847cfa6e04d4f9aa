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

#include "hamsurf/concat.h"

#include <cmath>

#include "hamsurf/errors.h"

namespace hamsurf {

std::string BaseCode::name() const {
    switch (kind) {
        case BaseKind::steane:
            return "steane";
        case BaseKind::surface:
            return "surface(" + std::to_string(distance) + ")";
        case BaseKind::bare:
            return "bare";
    }
    return "?";
}

const HammingLevelCode &ConcatenationSchema::code(int level) const {
    if (level < first_level || level > top_level) {
        throw IndexError("schema has no code at level " + std::to_string(level));
    }
    return codes[static_cast<size_t>(level - first_level)];
}

size_t ConcatenationSchema::registers_at(int level) const {
    if (level < first_level || level > top_level + 1) {
        throw IndexError("schema has no registers at level " + std::to_string(level));
    }
    size_t count = 1;
    for (int l = level; l <= top_level; l++) {
        count *= code(l).n;
    }
    return count;
}

size_t ConcatenationSchema::register_width(int level) const {
    if (level < first_level || level > top_level + 1) {
        throw IndexError("schema has no registers at level " + std::to_string(level));
    }
    size_t width = 1;
    for (int l = first_level; l < level; l++) {
        width *= code(l).k;
    }
    return width;
}

size_t ConcatenationSchema::blocks_at(int level) const {
    return registers_at(level + 1) * register_width(level);
}

std::vector<size_t> ConcatenationSchema::block_members(int level, size_t group, size_t block) const {
    const auto &c = code(level);
    size_t width = register_width(level);
    if (group >= registers_at(level + 1) || block >= width) {
        throw IndexError("block_members: (group " + std::to_string(group) + ", block " + std::to_string(block) +
                         ") out of range at level " + std::to_string(level));
    }
    std::vector<size_t> out(c.n);
    for (size_t j = 0; j < c.n; j++) {
        out[j] = (group * c.n + j) * width + block;
    }
    return out;
}

size_t ConcatenationSchema::base_overhead() const {
    switch (base.kind) {
        case BaseKind::steane:
            return hamming_block_length(0);
        case BaseKind::surface:
            return physical_per_register;
        case BaseKind::bare:
            return 1;
    }
    return 1;
}

ConcatenationSchema build_schema(int top_level, BaseCode base, LogicalBasis basis) {
    ConcatenationSchema s;
    s.base = base;
    s.top_level = top_level;
    switch (base.kind) {
        case BaseKind::steane:
            if (top_level < 0) {
                throw ParameterError("build_schema: level must be >= 0");
            }
            s.first_level = 0;
            s.physical_per_register = 1;
            break;
        case BaseKind::surface:
            if (top_level < 0) {
                throw ParameterError("build_schema: level must be >= 0");
            }
            s.first_level = 1;
            s.physical_per_register = build_surface(base.distance).n_data;
            break;
        case BaseKind::bare:
            if (top_level < 1) {
                throw ParameterError("build_schema: bare base needs level >= 1");
            }
            s.first_level = 1;
            s.physical_per_register = 1;
            break;
    }
    for (int l = s.first_level; l <= top_level; l++) {
        s.codes.push_back(build_level_code(l, basis));
    }
    s.base_registers = 1;
    s.total_logical = 1;
    for (const auto &c : s.codes) {
        s.base_registers *= c.n;
        s.total_logical *= c.k;
    }
    s.total_physical = s.base_registers * s.physical_per_register;
    return s;
}

OverheadRow overhead(int d, int level) {
    if (level < 0) {
        throw ParameterError("overhead: level must be >= 0");
    }
    OverheadRow row;
    row.d = d;
    row.level = level;
    row.overhead_exact = static_cast<double>(surface_data_count(d));
    for (int l = 1; l <= level; l++) {
        row.overhead_exact *= static_cast<double>(hamming_block_length(l)) / static_cast<double>(hamming_logical_count(l));
    }
    row.overhead_rounded = std::lround(row.overhead_exact);
    return row;
}

double memory_failure_from_single(double single, size_t k) {
    if (!(single >= 0.0 && single <= 1.0)) {
        throw ParameterError("memory_failure_from_single: probability outside [0, 1]");
    }
    if (k < 1) {
        throw ParameterError("memory_failure_from_single: k must be >= 1");
    }
    if (single == 1.0) {
        return 1.0;
    }
    return -std::expm1(static_cast<double>(k) * std::log1p(-single));
}

}  // namespace hamsurf
