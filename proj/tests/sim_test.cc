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

#include "hamsurf/sim.h"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <sstream>

#include "hamsurf/errors.h"
#include "hamsurf/surface_decoder.h"
#include "oracles.h"

namespace hamsurf {
namespace {

TEST(HammingCampaign, ZeroNoise) {
    auto r = run_hamming_campaign(2, 0.0, 3000, 1);
    EXPECT_EQ(r.rate.failures, 0u);
    EXPECT_EQ(r.rate.trials, 3000u);
    EXPECT_EQ(r.stats.weight_histogram[0], 3000u);
}

TEST(HammingCampaign, WorkerCountDoesNotChangeCounts) {
    auto one = run_hamming_campaign(2, 0.02, 5000, 77, BaseCode::steane(), 1);
    auto three = run_hamming_campaign(2, 0.02, 5000, 77, BaseCode::steane(), 3);
    EXPECT_EQ(one.stats, three.stats);
    auto bare1 = run_hamming_campaign(1, 0.08, 4000, 5, BaseCode::bare(), 1);
    auto bare4 = run_hamming_campaign(1, 0.08, 4000, 5, BaseCode::bare(), 4);
    EXPECT_EQ(bare1.stats, bare4.stats);
}

TEST(HammingCampaign, AnyFailureIsBasisInvariant) {
    auto ext = run_hamming_campaign(1, 0.08, 4000, 9, BaseCode::bare(), 1, LogicalBasis::extracted);
    auto ref = run_hamming_campaign(1, 0.08, 4000, 9, BaseCode::bare(), 1, LogicalBasis::reference);
    EXPECT_EQ(ext.stats.failures, ref.stats.failures);
    EXPECT_EQ(ext.stats.weight_histogram[0], ref.stats.weight_histogram[0]);
    // Which logical qubits fail does depend on the basis.
    EXPECT_NE(ext.stats.qubit_failures, ref.stats.qubit_failures);
}

TEST(HammingCampaign, SeedChangesSample) {
    auto a = run_hamming_campaign(1, 0.03, 5000, 1);
    auto b = run_hamming_campaign(1, 0.03, 5000, 2);
    EXPECT_NE(a.stats, b.stats);
}

TEST(HammingCampaign, LevelOneMatchesExactEnumeration) {
    double exact = testing::level1_exact_failure(0.02);
    auto r = run_hamming_campaign(1, 0.02, 100000, 2024);
    double sigma = std::sqrt(exact * (1 - exact) / 100000.0);
    EXPECT_LT(std::abs(r.rate.p_hat - exact), 2 * sigma) << "exact " << exact << " sampled " << r.rate.p_hat;
}

TEST(HammingCampaign, TruncatedEnumerationBoundsExact) {
    double exact = testing::level1_exact_failure(0.02);
    double previous = 0;
    for (int w = 0; w <= 12; w++) {
        double t = testing::level1_truncated_failure(0.02, w);
        EXPECT_GE(t, previous - 1e-15);
        EXPECT_LE(t, exact + 1e-12);
        previous = t;
    }
    // Weight <= 3 patterns never defeat two levels of distance-3 codes.
    EXPECT_EQ(testing::level1_truncated_failure(0.02, 3), 0.0);
    EXPECT_NEAR(testing::level1_truncated_failure(0.02, 105), exact, 1e-12);
}

TEST(HammingCampaign, MonotoneInP) {
    double last = -1;
    for (double p : {0.005, 0.01, 0.02, 0.04}) {
        auto r = run_hamming_campaign(1, p, 20000, 3);
        EXPECT_GE(r.rate.ci_high, last);
        last = r.rate.p_hat;
    }
}

TEST(HammingCampaign, RejectsBadParameters) {
    EXPECT_THROW(run_hamming_campaign(1, 1.5, 10, 1), ParameterError);
    EXPECT_THROW(run_hamming_campaign(1, 0.1, 0, 1), ParameterError);
    EXPECT_THROW(run_hamming_campaign(1, 0.1, 10, 1, BaseCode::surface(3)), ParameterError);
}

TEST(SurfaceRate, ZeroNoise) {
    EXPECT_EQ(estimate_surface_rate(3, 0.0, 1000, 1).failures, 0u);
}

TEST(SurfaceRate, MatchesExhaustiveExpectationAtDistanceThree) {
    auto lat = build_surface(3);
    SurfaceDecoder decoder(lat);
    double p = 0.1;
    double expected = 0;
    for (uint32_t e = 0; e < (1u << 13); e++) {
        BitVector v(13);
        for (size_t q = 0; q < 13; q++) {
            v.set(q, (e >> q) & 1);
        }
        if (decoder.fails(v)) {
            int w = std::popcount(e);
            expected += std::pow(p, w) * std::pow(1 - p, 13 - w);
        }
    }
    auto r = estimate_surface_rate(3, p, 100000, 99);
    EXPECT_LE(r.ci_low, expected);
    EXPECT_GE(r.ci_high, expected);
}

TEST(SurfaceRateTable, CsvRoundTrip) {
    SurfaceRateTable t;
    t.insert(3, 0.013, RateEstimate::from_counts(31, 10000, 5));
    t.insert(5, 0.1 + 0.2, RateEstimate::from_counts(7, 1000, 6));
    std::stringstream ss;
    t.write_csv(ss);
    auto back = SurfaceRateTable::read_csv(ss);
    EXPECT_EQ(back.size(), 2u);
    EXPECT_EQ(back.lookup(3, 0.013).failures, 31u);
    EXPECT_EQ(back.lookup(5, 0.1 + 0.2).trials, 1000u);
    EXPECT_THROW(back.lookup(3, 0.014), PreconditionError);
}

TEST(SurfaceRateTable, MalformedInputNamesRow) {
    std::stringstream bad("d,p,trials,failures,p_logical,ci_low,ci_high,seed\n3,0.01,100,2,0.02,0,0.1,1\n3,x,1,1,1,1,1,1\n");
    try {
        SurfaceRateTable::read_csv(bad);
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("row 3"), std::string::npos);
    }
    std::stringstream header("d,p\n");
    EXPECT_THROW(SurfaceRateTable::read_csv(header), ParseError);
}

TEST(SurfaceHammingCampaign, ZeroSurfaceRate) {
    SurfaceRateTable t;
    t.insert(3, 0.01, RateEstimate::from_counts(0, 1000));
    auto r = run_surface_hamming_campaign(3, 2, 0.01, 2000, 4, t);
    EXPECT_EQ(r.rate.failures, 0u);
    EXPECT_THROW(run_surface_hamming_campaign(3, 2, 0.02, 10, 4, t), PreconditionError);
}

TEST(SurfaceHammingCampaign, EquivalentToBareCodeAtSurfaceRate) {
    // The surface stage only sets the register flip probability.
    SurfaceRateTable t;
    t.insert(3, 0.02, RateEstimate::from_counts(50, 10000));
    auto sh = run_surface_hamming_campaign(3, 1, 0.02, 5000, 8, t);
    auto bare = run_hamming_campaign(1, 0.005, 5000, 8, BaseCode::bare());
    EXPECT_EQ(sh.stats, bare.stats);
}

}  // namespace
}  // namespace hamsurf
