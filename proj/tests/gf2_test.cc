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

#include "hamsurf/gf2.h"

#include <gtest/gtest.h>

#include <random>

#include "hamsurf/codes.h"
#include "hamsurf/errors.h"

namespace hamsurf {
namespace {

BitMatrix random_matrix(std::mt19937_64 &rng, size_t rows, size_t cols) {
    BitMatrix m(rows, cols);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            m.set(r, c, rng() & 1);
        }
    }
    return m;
}

TEST(BitVector, XorIsEntrywiseAddition) {
    auto a = BitVector::from_string("1100101");
    auto b = BitVector::from_string("1010110");
    EXPECT_EQ((a ^ b).str(), "0110011");
    EXPECT_EQ((a ^ a).popcount(), 0u);
}

TEST(BitVector, ParsingRejectsJunk) {
    EXPECT_EQ(BitVector::from_string("10 1\t1").str(), "1011");
    EXPECT_THROW(BitVector::from_string("10x1"), ParseError);
    EXPECT_THROW(BitVector::unit(4, 4), IndexError);
}

TEST(BitVector, TailBitsStayClear) {
    auto v = BitVector::ones(70);
    EXPECT_EQ(v.popcount(), 70u);
    v ^= BitVector::ones(70);
    EXPECT_TRUE(v.none());
    EXPECT_EQ(v, BitVector(70));
}

TEST(BitVector, ParityDotIsSymmetricAndBilinear) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 1 + rng() % 130;
        BitVector u(n), v(n), w(n);
        for (size_t i = 0; i < n; i++) {
            u.set(i, rng() & 1);
            v.set(i, rng() & 1);
            w.set(i, rng() & 1);
        }
        EXPECT_EQ(parity_dot(u, v), parity_dot(v, u));
        EXPECT_EQ(parity_dot(u, v ^ w), parity_dot(u, v) != parity_dot(u, w));
    }
    EXPECT_THROW(parity_dot(BitVector(3), BitVector(4)), DimensionError);
}

TEST(RowReduce, Identity) {
    auto rr = row_reduce(BitMatrix::identity(3));
    EXPECT_EQ(rr.rank, 3u);
    EXPECT_EQ(rr.pivot_cols, (std::vector<size_t>{0, 1, 2}));
}

TEST(RowReduce, ZeroMatrix) {
    auto rr = row_reduce(BitMatrix(2, 5));
    EXPECT_EQ(rr.rank, 0u);
    EXPECT_TRUE(rr.pivot_cols.empty());
    EXPECT_EQ(rank(BitMatrix()), 0u);
}

TEST(RowReduce, HammingCheckMatrixHasFullRank) {
    EXPECT_EQ(rank(hamming_check_matrix(3)), 3u);
}

TEST(RowReduce, IdempotentOnOwnOutput) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; trial++) {
        auto m = random_matrix(rng, 1 + rng() % 8, 1 + rng() % 12);
        auto once = row_reduce(m).reduced;
        EXPECT_EQ(row_reduce(once).reduced, once);
    }
}

TEST(KernelBasis, Examples) {
    EXPECT_EQ(kernel_basis(BitMatrix::identity(4)).num_rows(), 0u);
    EXPECT_EQ(kernel_basis(BitMatrix(2, 3)).num_rows(), 3u);
    EXPECT_EQ(kernel_basis(hamming_check_matrix(3)).num_rows(), 4u);
}

TEST(KernelBasis, RankNullityAndOrthogonality) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; trial++) {
        auto m = random_matrix(rng, 1 + rng() % 8, 1 + rng() % 12);
        auto k = kernel_basis(m);
        EXPECT_EQ(rank(m) + k.num_rows(), m.num_cols());
        EXPECT_EQ(rank(k), k.num_rows());
        EXPECT_TRUE(m.gram(k).is_zero());
    }
}

TEST(InRowSpace, Examples) {
    auto h3 = hamming_check_matrix(3);
    EXPECT_TRUE(in_row_space(h3, BitVector(7)));
    EXPECT_TRUE(in_row_space(BitMatrix::identity(3), BitVector{1, 1, 0}));
    EXPECT_FALSE(in_row_space(h3, BitVector::from_string("0101010")));
    EXPECT_THROW(in_row_space(h3, BitVector(6)), DimensionError);
}

TEST(InRowSpace, AgreesWithExhaustiveSpan) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 40; trial++) {
        size_t rows = 1 + rng() % 5;
        size_t cols = 1 + rng() % 10;
        auto m = random_matrix(rng, rows, cols);
        std::vector<bool> in_span(size_t{1} << cols, false);
        for (uint64_t combo = 0; combo < (uint64_t{1} << rows); combo++) {
            BitVector v(cols);
            for (size_t r = 0; r < rows; r++) {
                if ((combo >> r) & 1) {
                    v ^= m.row(r);
                }
            }
            uint64_t key = 0;
            for (size_t c = 0; c < cols; c++) {
                key |= uint64_t{v.get(c)} << c;
            }
            in_span[key] = true;
        }
        for (uint64_t key = 0; key < (uint64_t{1} << cols); key++) {
            BitVector v(cols);
            for (size_t c = 0; c < cols; c++) {
                v.set(c, (key >> c) & 1);
            }
            EXPECT_EQ(in_row_space(m, v), in_span[key]);
        }
    }
}

TEST(BitMatrix, MultiplyTransposeGram) {
    auto h = hamming_check_matrix(3);
    EXPECT_EQ(h.transpose().transpose(), h);
    EXPECT_EQ(h.multiply(BitVector::unit(7, 4)).str(), "101");
    EXPECT_THROW(h.multiply(BitVector(8)), DimensionError);
    EXPECT_EQ(h.gram(h).num_rows(), 3u);
}

}  // namespace
}  // namespace hamsurf
