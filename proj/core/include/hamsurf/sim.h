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

#ifndef HAMSURF_SIM_H
#define HAMSURF_SIM_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hamsurf/concat.h"
#include "hamsurf/rng.h"
#include "hamsurf/stats.h"

namespace hamsurf {

/// 0 means std::thread::hardware_concurrency().
size_t resolve_worker_count(size_t workers);

/// Trials are drawn in consecutive runs of this many per RNG stream; stream
/// b covers trials [b * kTrialsPerStream, (b + 1) * kTrialsPerStream).
inline constexpr uint64_t kTrialsPerStream = 1024;

/// Runs `trials` trials. Streams are split into contiguous ranges over
/// `workers` threads; `make_worker` is called once per thread and returns the
/// per-trial body, which draws from the stream engine and records into the
/// thread's TrialStats. Since streams depend only on (seed, stream index) and
/// merging only adds counts, the worker count never changes the result.
using TrialBody = std::function<void(std::mt19937_64 &engine, TrialStats &stats)>;
TrialStats run_trials(size_t num_logical, uint64_t trials, uint64_t seed, size_t workers,
                      const std::function<TrialBody()> &make_worker);

struct CampaignResult {
    RateEstimate rate;
    TrialStats stats;
};

/// Memory experiment on a concatenated Hamming code with i.i.d. bit flips on
/// every base register. A trial fails when any top-level logical bit flips.
CampaignResult run_hamming_campaign(int level, double p, uint64_t trials, uint64_t seed,
                                    BaseCode base = BaseCode::steane(), size_t workers = 0,
                                    LogicalBasis basis = LogicalBasis::extracted);

/// Single-block surface code memory: P_sur(d, p).
RateEstimate estimate_surface_rate(int d, double p, uint64_t trials, uint64_t seed, size_t workers = 0,
                                   bool allow_even = false);

/// P_sur(d, p) estimates keyed on the exact p grid they were sampled on.
class SurfaceRateTable {
   public:
    void insert(int d, double p, const RateEstimate &rate);
    bool contains(int d, double p) const;
    /// Throws PreconditionError when (d, p) has no entry.
    const RateEstimate &lookup(int d, double p) const;
    size_t size() const {
        return entries_.size();
    }

    /// Columns: d,p,trials,failures,p_logical,ci_low,ci_high,seed.
    void write_csv(std::ostream &out) const;
    /// Throws ParseError (with the row number) on malformed input.
    static SurfaceRateTable read_csv(std::istream &in);

   private:
    std::map<std::pair<int, double>, RateEstimate> entries_;
};

/// Surface-Hamming memory: each surface register suffers a logical flip with
/// probability P_sur(d, p) from `table`, then Hamming levels 1..level decode.
CampaignResult run_surface_hamming_campaign(int d, int level, double p, uint64_t trials, uint64_t seed,
                                            const SurfaceRateTable &table, size_t workers = 0);

}  // namespace hamsurf

#endif
