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

#include "hamsurf/surface_decoder.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hamsurf/errors.h"
#include "oracles.h"

namespace hamsurf {
namespace {

BitVector from_mask(uint32_t mask, size_t n) {
    BitVector v(n);
    for (size_t q = 0; q < n; q++) {
        v.set(q, (mask >> q) & 1);
    }
    return v;
}

TEST(MwpmDecodeSurface, NoDefects) {
    auto lat = build_surface(3);
    auto out = mwpm_decode_surface(DefectSet{}, lat);
    EXPECT_TRUE(out.correction.none());
    EXPECT_EQ(out.weight, 0u);
}

TEST(MwpmDecodeSurface, AdjacentDefectsShareOneQubit) {
    auto lat = build_surface(5);
    // Interior data qubit (3, 3) sits between Z checks (2, 3) and (4, 3).
    long q = lat.data_index(3, 3);
    ASSERT_GE(q, 0);
    auto e = BitVector::unit(lat.n_data, static_cast<size_t>(q));
    auto defects = DefectSet::from_error(lat, e);
    ASSERT_EQ(defects.checks.size(), 2u);
    auto out = mwpm_decode_surface(defects, lat);
    EXPECT_EQ(out.correction, e);
    EXPECT_EQ(out.weight, 1u);
}

TEST(MwpmDecodeSurface, CorrectionReproducesSyndrome) {
    std::mt19937_64 rng(8);
    for (int d : {3, 5, 7, 9}) {
        auto lat = build_surface(d);
        for (int trial = 0; trial < 300; trial++) {
            BitVector e(lat.n_data);
            for (size_t q = 0; q < lat.n_data; q++) {
                e.set(q, rng() % 12 == 0);
            }
            auto defects = DefectSet::from_error(lat, e);
            auto out = mwpm_decode_surface(defects, lat);
            EXPECT_EQ(DefectSet::from_error(lat, out.correction).checks, defects.checks);
            EXPECT_EQ(out.correction.popcount(), out.weight);
        }
    }
}

TEST(MwpmDecodeSurface, RejectsForeignDefects) {
    auto lat = build_surface(3);
    EXPECT_THROW(mwpm_decode_surface(DefectSet{{6}}, lat), IndexError);
    EXPECT_THROW(DefectSet::from_error(lat, BitVector(12)), DimensionError);
}

TEST(MwpmDecodeSurface, ExhaustiveMinimumWeightAtDistanceThree) {
    auto lat = build_surface(3);
    auto oracle = testing::build_surface_oracle(lat);
    SurfaceDecoder decoder(lat);
    size_t strict_failures = 0, ties = 0, failures = 0;
    for (uint32_t e = 0; e < (1u << 13); e++) {
        auto error = from_mask(e, 13);
        auto out = decoder.decode(DefectSet::from_error(lat, error));
        const auto &mw = oracle.min_weight[oracle.syndrome_of(e)];
        uint32_t best = std::min(mw[0], mw[1]);
        ASSERT_EQ(out.correction.popcount(), best) << "error mask " << e;
        bool fail = surface_logical_failure(lat, error, out.correction);
        failures += fail;
        if (mw[0] == mw[1]) {
            ties++;
            continue;
        }
        bool oracle_fail = (mw[1] < mw[0]) != oracle.logical_class(e);
        strict_failures += oracle_fail;
        ASSERT_EQ(fail, oracle_fail) << "error mask " << e;
    }
    EXPECT_GE(failures, strict_failures);
    EXPECT_LE(failures, strict_failures + ties);
}

TEST(MwpmDecodeSurface, WeightMatchesDynamicProgrammingOracle) {
    std::mt19937_64 rng(9);
    for (int d : {5, 7}) {
        auto lat = build_surface(d);
        size_t checked = 0;
        while (checked < 10000) {
            BitVector e(lat.n_data);
            double p = 0.02 + 0.01 * static_cast<double>(rng() % 5);
            std::bernoulli_distribution flip(p);
            for (size_t q = 0; q < lat.n_data; q++) {
                e.set(q, flip(rng));
            }
            auto defects = DefectSet::from_error(lat, e);
            if (defects.checks.size() > 16) {
                continue;
            }
            auto out = mwpm_decode_surface(defects, lat);
            ASSERT_EQ(out.weight, testing::min_matching_weight(defects.checks, lat)) << "d=" << d;
            checked++;
        }
    }
}

TEST(SurfaceDecoder, SingleErrorsNeverFail) {
    for (int d : {3, 5, 7}) {
        SurfaceDecoder decoder(build_surface(d));
        for (uint32_t q = 0; q < decoder.lattice().n_data; q++) {
            EXPECT_FALSE(decoder.fails_sparse({q}));
        }
    }
}

TEST(SurfaceDecoder, CorrectsUpToHalfDistance) {
    std::mt19937_64 rng(10);
    for (int d : {5, 7}) {
        SurfaceDecoder decoder(build_surface(d));
        size_t n = decoder.lattice().n_data;
        for (int trial = 0; trial < 2000; trial++) {
            std::vector<uint32_t> flips;
            while (flips.size() < static_cast<size_t>((d - 1) / 2)) {
                uint32_t q = static_cast<uint32_t>(rng() % n);
                if (std::find(flips.begin(), flips.end(), q) == flips.end()) {
                    flips.push_back(q);
                }
            }
            EXPECT_FALSE(decoder.fails_sparse(flips));
        }
    }
}

}  // namespace
}  // namespace hamsurf
