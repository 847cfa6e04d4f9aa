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

#ifndef HAMSURF_DECODE_H
#define HAMSURF_DECODE_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hamsurf/codes.h"
#include "hamsurf/concat.h"

namespace hamsurf {

/// N = sum_i s_i 2^i. Zero means no correction; otherwise qubit N (1-based) is flipped.
size_t hamming_decode_block(const Syndrome &s);

/// Decodes each block independently: s = H e, q = unit(N) (or 0), r = e + q,
/// output = L r. Throws DimensionError on a frame of the wrong length.
std::vector<BitVector> decode_level(std::span<const BitVector> frames, const HammingLevelCode &code);

enum class ExecutionMode { sequential, parallel };

/// Bottom-up decode of a base-register frame (one bit per base register).
/// Returns the top-level logical frame of schema.total_logical bits.
///
/// This is the reference path built from decode_level; FrameDecoder computes
/// the same map much faster.
BitVector decode_concatenated(const BitVector &frame, const ConcatenationSchema &schema,
                              ExecutionMode mode = ExecutionMode::sequential);

/// Table-driven concatenated decoder.
///
/// Each block fits in one word: the syndrome of qubit j is just j + 1, and
/// L e is the XOR of the columns of L over the set qubits. Requires K <= 64 at
/// every level (levels <= 3).
class FrameDecoder {
   public:
    explicit FrameDecoder(const ConcatenationSchema &schema);

    /// Reusable per-thread buffers for the sparse path.
    class Workspace {
       public:
        Workspace() = default;

       private:
        friend class FrameDecoder;
        struct Level {
            std::vector<uint64_t> acc_logical;
            std::vector<uint8_t> acc_syndrome;
            std::vector<uint8_t> touched_flag;
            std::vector<uint32_t> touched;
        };
        std::vector<Level> levels;
        std::vector<uint32_t> current;
        std::vector<uint32_t> next;
    };
    Workspace make_workspace() const;

    /// Sparse decode: `flips` lists the set bits of the base frame (any order,
    /// no repeats). Writes the set bits of the top-level frame into `out`,
    /// unordered. Cost scales with the number of touched blocks.
    void decode_sparse(std::span<const uint32_t> flips, Workspace &ws, std::vector<uint32_t> &out) const;

    /// Dense decode visiting every block. In parallel mode each level's blocks
    /// are split across `workers` threads (0 picks the hardware concurrency).
    BitVector decode(const BitVector &frame, ExecutionMode mode = ExecutionMode::sequential,
                     size_t workers = 0) const;

    const ConcatenationSchema &schema() const {
        return schema_;
    }

   private:
    struct LevelTable {
        size_t n;
        size_t k;
        size_t width;
        size_t groups;
        /// col_logical[j]: bit i set iff L_i has qubit j.
        std::vector<uint64_t> col_logical;
    };
    void decode_blocks(const LevelTable &t, const BitVector &in, BitVector &out, size_t begin, size_t end) const;

    ConcatenationSchema schema_;
    std::vector<LevelTable> tables_;
};

}  // namespace hamsurf

#endif
