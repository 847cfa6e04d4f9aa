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


#include "hamsurf/cli/bench.h"

#include <chrono>
#include <cmath>
#include <set>

#include "hamsurf/decode.h"
#include "hamsurf/errors.h"
#include "hamsurf/rng.h"
#include "hamsurf/sim.h"
#include "hamsurf/surface_decoder.h"

namespace hamsurf::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ns(Clock::time_point a, Clock::time_point b) {
    return static_cast<double>(std::chrono::duration_cast<std::chrono::nanoseconds>(b - a).count());
}

// Welford accumulation of per-call times.
struct Moments {
    uint64_t n = 0;
    double mean = 0;
    double m2 = 0;

    void add(double x) {
        n++;
        double delta = x - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (x - mean);
    }
    double stddev() const {
        return n > 1 ? std::sqrt(m2 / static_cast<double>(n - 1)) : 0.0;
    }
};

template <class Sample, class Decode>
TimingRecord time_decoder(const std::string &name, const std::string &mode, const BenchConfig &config,
                          uint64_t stream, Sample &&sample, Decode &&decode) {
    auto engine = stream_engine(config.seed, stream);
    for (uint64_t i = 0; i < config.warmup; i++) {
        sample(engine);
        decode();
    }
    Moments decode_time;
    double sample_total = 0;
    for (uint64_t i = 0; i < config.trials; i++) {
        auto t0 = Clock::now();
        sample(engine);
        auto t1 = Clock::now();
        decode();
        auto t2 = Clock::now();
        sample_total += elapsed_ns(t0, t1);
        decode_time.add(elapsed_ns(t1, t2));
    }
    TimingRecord r;
    r.decoder = name;
    r.mode = mode;
    r.trials = config.trials;
    r.mean_ns = decode_time.mean;
    r.stddev_ns = decode_time.stddev();
    r.sample_ns = sample_total / static_cast<double>(config.trials);
    return r;
}

}  // namespace

std::vector<TimingRecord> bench_decoders(const BenchConfig &config) {
    if (config.trials < 1) {
        throw ParameterError("bench: --trials must be >= 1");
    }
    if (!(config.p >= 0.0 && config.p <= 1.0)) {
        throw ParameterError("bench: --p outside [0, 1]");
    }
    std::set<int> levels;
    std::set<int> distances;
    for (auto [level, d] : config.pairs) {
        if (level < 1) {
            throw ParameterError("bench: --pairs level must be >= 1");
        }
        levels.insert(level);
        distances.insert(d);
    }

    std::vector<TimingRecord> out;
    std::vector<uint32_t> flips;
    for (int level : levels) {
        FrameDecoder decoder(build_schema(level, BaseCode::steane()));
        size_t n = decoder.schema().base_registers;
        size_t workers = resolve_worker_count(config.workers);
        for (auto mode : {ExecutionMode::sequential, ExecutionMode::parallel}) {
            BitVector frame(n);
            BitVector result;
            auto sample = [&](std::mt19937_64 &engine) {
                for (uint32_t x : flips) {
                    frame.set(x, false);
                }
                flips.clear();
                sample_flips(n, config.p, engine, flips);
                for (uint32_t x : flips) {
                    frame.set(x, true);
                }
            };
            auto decode = [&] { result = decoder.decode(frame, mode, workers); };
            std::string mode_name = mode == ExecutionMode::sequential ? "sequential" : "parallel";
            // Both modes see the same error sequence.
            flips.clear();
            out.push_back(time_decoder("hamming-" + std::to_string(level), mode_name, config,
                                       static_cast<uint64_t>(level), sample, decode));
        }
    }
    for (int d : distances) {
        SurfaceDecoder decoder(build_surface(d));
        size_t n = decoder.lattice().n_data;
        BitVector error(n);
        SurfaceCorrection correction;
        auto sample = [&](std::mt19937_64 &engine) {
            for (uint32_t x : flips) {
                error.set(x, false);
            }
            flips.clear();
            sample_flips(n, config.p, engine, flips);
            for (uint32_t x : flips) {
                error.set(x, true);
            }
        };
        auto decode = [&] { correction = decoder.decode(DefectSet::from_error(decoder.lattice(), error)); };
        flips.clear();
        out.push_back(
            time_decoder("surface-" + std::to_string(d), "sequential", config, 1000 + static_cast<uint64_t>(d), sample,
                         decode));
    }
    return out;
}

}  // namespace hamsurf::cli
