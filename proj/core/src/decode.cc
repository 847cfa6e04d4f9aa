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

#include "hamsurf/decode.h"

#include <algorithm>
#include <bit>
#include <future>
#include <string>
#include <thread>

#include "hamsurf/errors.h"

namespace hamsurf {

namespace {

size_t resolve_workers(size_t workers) {
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    return workers;
}

BitVector decode_one(const BitVector &e, const HammingLevelCode &code) {
    if (e.size() != code.n) {
        throw DimensionError("decode_level: frame has " + std::to_string(e.size()) + " bits, code needs " +
                             std::to_string(code.n));
    }
    size_t n_index = hamming_decode_block(syndrome(code.checks, e));
    BitVector r = e;
    if (n_index != 0) {
        r.flip(n_index - 1);
    }
    return code.logicals.multiply(r);
}

}  // namespace

size_t hamming_decode_block(const Syndrome &s) {
    if (s.size() >= 64) {
        throw DimensionError("hamming_decode_block: syndrome too long");
    }
    size_t n_index = 0;
    for (size_t i = 0; i < s.size(); i++) {
        if (s.get(i)) {
            n_index |= size_t{1} << i;
        }
    }
    return n_index;
}

std::vector<BitVector> decode_level(std::span<const BitVector> frames, const HammingLevelCode &code) {
    std::vector<BitVector> out;
    out.reserve(frames.size());
    for (const auto &e : frames) {
        out.push_back(decode_one(e, code));
    }
    return out;
}

BitVector decode_concatenated(const BitVector &frame, const ConcatenationSchema &schema, ExecutionMode mode) {
    if (frame.size() != schema.base_registers) {
        throw DimensionError("decode_concatenated: frame has " + std::to_string(frame.size()) +
                             " bits, schema has " + std::to_string(schema.base_registers) + " base registers");
    }
    BitVector current = frame;
    for (int l = schema.first_level; l <= schema.top_level; l++) {
        const auto &code = schema.code(l);
        size_t width = schema.register_width(l);
        size_t groups = schema.registers_at(l + 1);

        std::vector<BitVector> blocks;
        blocks.reserve(groups * width);
        for (size_t g = 0; g < groups; g++) {
            for (size_t b = 0; b < width; b++) {
                BitVector e(code.n);
                auto members = schema.block_members(l, g, b);
                for (size_t j = 0; j < code.n; j++) {
                    if (current.get(members[j])) {
                        e.set(j, true);
                    }
                }
                blocks.push_back(std::move(e));
            }
        }

        std::vector<BitVector> decoded;
        if (mode == ExecutionMode::sequential || blocks.size() < 2) {
            decoded = decode_level(blocks, code);
        } else {
            size_t workers = std::min(resolve_workers(0), blocks.size());
            size_t chunk = (blocks.size() + workers - 1) / workers;
            std::vector<std::future<std::vector<BitVector>>> parts;
            for (size_t begin = 0; begin < blocks.size(); begin += chunk) {
                size_t end = std::min(blocks.size(), begin + chunk);
                parts.push_back(std::async(std::launch::async, [&, begin, end] {
                    return decode_level(std::span<const BitVector>(blocks).subspan(begin, end - begin), code);
                }));
            }
            for (auto &part : parts) {
                for (auto &v : part.get()) {
                    decoded.push_back(std::move(v));
                }
            }
        }

        BitVector next(groups * width * code.k);
        for (size_t block = 0; block < decoded.size(); block++) {
            for (size_t i : decoded[block].ones_indices()) {
                next.set(block * code.k + i, true);
            }
        }
        current = std::move(next);
    }
    return current;
}

FrameDecoder::FrameDecoder(const ConcatenationSchema &schema) : schema_(schema) {
    for (int l = schema.first_level; l <= schema.top_level; l++) {
        const auto &code = schema.code(l);
        if (code.k > 64 || code.n > 255) {
            throw ParameterError("FrameDecoder: level " + std::to_string(l) + " does not fit one word per block");
        }
        LevelTable t;
        t.n = code.n;
        t.k = code.k;
        t.width = schema.register_width(l);
        t.groups = schema.registers_at(l + 1);
        t.col_logical.assign(code.n, 0);
        for (size_t i = 0; i < code.k; i++) {
            for (size_t j : code.logicals.row(i).ones_indices()) {
                t.col_logical[j] |= uint64_t{1} << i;
            }
        }
        tables_.push_back(std::move(t));
    }
}

FrameDecoder::Workspace FrameDecoder::make_workspace() const {
    Workspace ws;
    for (const auto &t : tables_) {
        Workspace::Level level;
        size_t blocks = t.groups * t.width;
        level.acc_logical.assign(blocks, 0);
        level.acc_syndrome.assign(blocks, 0);
        level.touched_flag.assign(blocks, 0);
        ws.levels.push_back(std::move(level));
    }
    return ws;
}

void FrameDecoder::decode_sparse(std::span<const uint32_t> flips, Workspace &ws, std::vector<uint32_t> &out) const {
    if (ws.levels.size() != tables_.size()) {
        ws = make_workspace();
    }
    if (!tables_.empty()) {
        const auto &t = tables_.front();
        size_t limit = t.groups * t.n * t.width;
        for (uint32_t x : flips) {
            if (x >= limit) {
                throw IndexError("FrameDecoder: flip index " + std::to_string(x) + " out of range");
            }
        }
    }
    ws.current.assign(flips.begin(), flips.end());
    for (size_t li = 0; li < tables_.size(); li++) {
        const auto &t = tables_[li];
        auto &lv = ws.levels[li];
        for (uint32_t x : ws.current) {
            size_t reg = x / t.width;
            size_t bit = x % t.width;
            size_t group = reg / t.n;
            size_t j = reg % t.n;
            size_t block = group * t.width + bit;
            lv.acc_syndrome[block] ^= static_cast<uint8_t>(j + 1);
            lv.acc_logical[block] ^= t.col_logical[j];
            if (!lv.touched_flag[block]) {
                lv.touched_flag[block] = 1;
                lv.touched.push_back(static_cast<uint32_t>(block));
            }
        }
        ws.next.clear();
        for (uint32_t block : lv.touched) {
            uint64_t logical = lv.acc_logical[block];
            uint8_t n_index = lv.acc_syndrome[block];
            if (n_index != 0) {
                logical ^= t.col_logical[n_index - 1];
            }
            size_t base = static_cast<size_t>(block) * t.k;
            while (logical) {
                ws.next.push_back(static_cast<uint32_t>(base + static_cast<size_t>(std::countr_zero(logical))));
                logical &= logical - 1;
            }
            lv.acc_logical[block] = 0;
            lv.acc_syndrome[block] = 0;
            lv.touched_flag[block] = 0;
        }
        lv.touched.clear();
        std::swap(ws.current, ws.next);
    }
    out.assign(ws.current.begin(), ws.current.end());
}

void FrameDecoder::decode_blocks(const LevelTable &t, const BitVector &in, BitVector &out, size_t begin,
                                 size_t end) const {
    for (size_t block = begin; block < end; block++) {
        size_t group = block / t.width;
        size_t bit = block % t.width;
        uint64_t logical = 0;
        size_t n_index = 0;
        size_t first = group * t.n * t.width + bit;
        for (size_t j = 0; j < t.n; j++) {
            if (in.get(first + j * t.width)) {
                n_index ^= j + 1;
                logical ^= t.col_logical[j];
            }
        }
        if (n_index != 0) {
            logical ^= t.col_logical[n_index - 1];
        }
        size_t base = block * t.k;
        while (logical) {
            out.flip(base + static_cast<size_t>(std::countr_zero(logical)));
            logical &= logical - 1;
        }
    }
}

BitVector FrameDecoder::decode(const BitVector &frame, ExecutionMode mode, size_t workers) const {
    if (frame.size() != schema_.base_registers) {
        throw DimensionError("FrameDecoder: frame has " + std::to_string(frame.size()) + " bits, schema has " +
                             std::to_string(schema_.base_registers) + " base registers");
    }
    BitVector current = frame;
    for (const auto &t : tables_) {
        size_t blocks = t.groups * t.width;
        BitVector next(blocks * t.k);
        size_t threads = mode == ExecutionMode::parallel ? std::min(resolve_workers(workers), blocks) : 1;
        if (threads <= 1) {
            decode_blocks(t, current, next, 0, blocks);
        } else {
            // Chunks are multiples of 64 blocks so no two threads write the same output word.
            size_t chunk = (blocks + threads - 1) / threads;
            chunk = (chunk + 63) / 64 * 64;
            std::vector<std::jthread> pool;
            for (size_t begin = 0; begin < blocks; begin += chunk) {
                size_t end = std::min(blocks, begin + chunk);
                pool.emplace_back([&, begin, end] { decode_blocks(t, current, next, begin, end); });
            }
        }
        current = std::move(next);
    }
    return current;
}

}  // namespace hamsurf
