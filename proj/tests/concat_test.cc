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

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "hamsurf/errors.h"

namespace hamsurf {
namespace {

TEST(BuildSchema, SteaneCheckpoints) {
    struct Case {
        int level;
        size_t physical, logical;
    };
    for (auto c : {Case{0, 7, 1}, Case{1, 105, 7}, Case{2, 3255, 147}, Case{3, 205065, 7497}}) {
        auto s = build_schema(c.level, BaseCode::steane());
        EXPECT_EQ(s.total_physical, c.physical);
        EXPECT_EQ(s.total_logical, c.logical);
    }
}

TEST(BuildSchema, SurfaceBase) {
    auto s = build_schema(1, BaseCode::surface(3));
    EXPECT_EQ(s.total_physical, 195u);
    EXPECT_EQ(s.total_logical, 7u);
    EXPECT_EQ(s.base_registers, 15u);
    auto s2 = build_schema(2, BaseCode::surface(3));
    EXPECT_EQ(s2.total_physical, 6045u);
    EXPECT_EQ(s2.total_logical, 147u);
    EXPECT_THROW(build_schema(1, BaseCode::surface(4)), ParameterError);
    EXPECT_THROW(build_schema(0, BaseCode::bare()), ParameterError);
    EXPECT_THROW(build_schema(-1, BaseCode::steane()), ParameterError);
}

TEST(BuildSchema, BlocksPartitionEachLevel) {
    for (auto base : {BaseCode::steane(), BaseCode::surface(3), BaseCode::bare()}) {
        auto s = build_schema(2, base);
        for (int l = s.first_level; l <= s.top_level; l++) {
            std::set<size_t> seen;
            size_t groups = s.registers_at(l + 1);
            for (size_t g = 0; g < groups; g++) {
                for (size_t b = 0; b < s.register_width(l); b++) {
                    for (size_t idx : s.block_members(l, g, b)) {
                        EXPECT_TRUE(seen.insert(idx).second);
                    }
                }
            }
            EXPECT_EQ(seen.size(), s.registers_at(l) * s.register_width(l));
            EXPECT_EQ(*seen.rbegin(), seen.size() - 1);
            EXPECT_EQ(s.register_width(l), qubits_per_register(l));
        }
    }
}

TEST(Overhead, Examples) {
    EXPECT_EQ(overhead(3, 1).overhead_rounded, 28);
    EXPECT_NEAR(overhead(3, 1).overhead_exact, 13.0 * 15 / 7, 1e-12);
    EXPECT_EQ(overhead(5, 3).overhead_rounded, 160);
    EXPECT_EQ(overhead(4, 2).overhead_rounded, 79);
    EXPECT_EQ(overhead(3, 0).overhead_rounded, 13);
}

TEST(Overhead, ConsistentWithSchema) {
    for (int d : {3, 5, 7}) {
        for (int level = 1; level <= 3; level++) {
            auto s = build_schema(level, BaseCode::surface(d));
            EXPECT_NEAR(overhead(d, level).overhead_exact * static_cast<double>(s.total_logical),
                        static_cast<double>(s.total_physical), 1e-6);
        }
    }
}

TEST(MemoryFailure, Examples) {
    EXPECT_EQ(memory_failure_from_single(0, 5), 0.0);
    EXPECT_DOUBLE_EQ(memory_failure_from_single(0.5, 1), 0.5);
    EXPECT_NEAR(memory_failure_from_single(0.01, 7), 1 - std::pow(0.99, 7), 1e-15);
    EXPECT_NEAR(memory_failure_from_single(0.01, 7), 0.06793, 1e-5);
    EXPECT_THROW(memory_failure_from_single(1.5, 1), ParameterError);
    EXPECT_THROW(memory_failure_from_single(0.1, 0), ParameterError);
}

}  // namespace
}  // namespace hamsurf
