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

#ifndef HAMSURF_RNG_H
#define HAMSURF_RNG_H

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "hamsurf/gf2.h"

namespace hamsurf {

/// Independent bit flips with probability p on every site.
struct ErrorModel {
    double p = 0.0;
};

/// Engine for one trial, derived from (seed, stream) alone so that trials can
/// run on any worker in any order.
std::mt19937_64 stream_engine(uint64_t seed, uint64_t stream);

/// Appends the indices of flipped sites among n, ascending. Uses geometric
/// skips, so the cost scales with n * p rather than n.
void sample_flips(size_t n, double p, std::mt19937_64 &engine, std::vector<uint32_t> &out);

/// Dense form of sample_flips on stream_engine(seed, stream).
BitVector sample_errors(size_t n, const ErrorModel &model, uint64_t seed, uint64_t stream);

}  // namespace hamsurf

#endif
