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

#include "hamsurf/rng.h"

#include <string>

#include "hamsurf/errors.h"

namespace hamsurf {

std::mt19937_64 stream_engine(uint64_t seed, uint64_t stream) {
    std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(stream),
                      static_cast<uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

void sample_flips(size_t n, double p, std::mt19937_64 &engine, std::vector<uint32_t> &out) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ParameterError("sample_flips: p = " + std::to_string(p) + " outside [0, 1]");
    }
    if (n > UINT32_MAX) {
        throw ParameterError("sample_flips: too many sites");
    }
    if (p == 0.0) {
        return;
    }
    if (p == 1.0) {
        for (size_t i = 0; i < n; i++) {
            out.push_back(static_cast<uint32_t>(i));
        }
        return;
    }
    std::geometric_distribution<uint64_t> gap(p);
    uint64_t pos = gap(engine);
    while (pos < n) {
        out.push_back(static_cast<uint32_t>(pos));
        pos += 1 + gap(engine);
    }
}

BitVector sample_errors(size_t n, const ErrorModel &model, uint64_t seed, uint64_t stream) {
    if (n < 1) {
        throw ParameterError("sample_errors: n must be >= 1");
    }
    auto engine = stream_engine(seed, stream);
    std::vector<uint32_t> flips;
    sample_flips(n, model.p, engine, flips);
    BitVector e(n);
    for (uint32_t i : flips) {
        e.set(i, true);
    }
    return e;
}

}  // namespace hamsurf
