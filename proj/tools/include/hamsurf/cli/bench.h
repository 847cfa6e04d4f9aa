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


#ifndef HAMSURF_CLI_BENCH_H
#define HAMSURF_CLI_BENCH_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hamsurf::cli {

struct TimingRecord {
    /// "hamming-<level>" or "surface-<d>".
    std::string decoder;
    /// "sequential" or "parallel".
    std::string mode;
    uint64_t trials = 0;
    double mean_ns = 0;
    double stddev_ns = 0;
    /// Mean time spent sampling the error of one trial (not part of mean_ns).
    double sample_ns = 0;
};

struct BenchConfig {
    /// (Hamming level, surface distance) pairs.
    std::vector<std::pair<int, int>> pairs = {{1, 5}, {2, 7}, {3, 9}};
    double p = 0.01526;
    uint64_t trials = 100000;
    uint64_t warmup = 100;
    uint64_t seed = 1;
    /// Worker threads for the parallel Hamming arm; 0 = all cores.
    size_t workers = 0;
};

/// Times decoding only. Hamming decoders run the dense frame decoder over a
/// Steane-based schema in sequential and parallel mode; the matching decoder
/// times syndrome extraction plus MWPM and runs sequentially. Applying the
/// correction and checking for failure are not timed. Each decoder appears
/// once even when several pairs name it.
std::vector<TimingRecord> bench_decoders(const BenchConfig &config);

}  // namespace hamsurf::cli

#endif
