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

#ifndef HAMSURF_STATS_H
#define HAMSURF_STATS_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hamsurf {

/// Wilson score interval. Throws ParameterError unless 0 <= failures <= trials,
/// trials >= 1 and 0 < confidence < 1.
std::pair<double, double> wilson_ci(uint64_t failures, uint64_t trials, double confidence = 0.95);

struct RateEstimate {
    uint64_t trials = 0;
    uint64_t failures = 0;
    double p_hat = 0;
    double ci_low = 0;
    double ci_high = 0;
    uint64_t seed = 0;

    static RateEstimate from_counts(uint64_t failures, uint64_t trials, uint64_t seed = 0);
};

/// Per-trial outcome counts of a logical frame with `num_logical` bits.
///
/// Merging is order independent, so a campaign split over any number of
/// workers sums to the same counts. The full outcome pattern histogram is kept
/// only for small frames (<= kMaxPatternBits), which is what the pairwise and
/// set correlation estimates need.
struct TrialStats {
    static constexpr size_t kMaxPatternBits = 16;

    size_t num_logical = 0;
    uint64_t trials = 0;
    uint64_t failures = 0;
    std::vector<uint64_t> qubit_failures;
    /// weight_histogram[w]: trials with exactly w failed logical qubits.
    std::vector<uint64_t> weight_histogram;
    /// pattern_counts[mask]: trials whose failure pattern is `mask`.
    std::vector<uint64_t> pattern_counts;

    TrialStats() = default;
    explicit TrialStats(size_t num_logical);

    bool has_patterns() const {
        return !pattern_counts.empty();
    }
    /// Records one trial from the indices of its failed logical qubits.
    void record(std::span<const uint32_t> failed);
    void merge(const TrialStats &other);
    bool operator==(const TrialStats &) const = default;
};

struct PairCorrelation {
    /// For pairs, `set` holds both qubits; for set-vs-qubit entries, the set.
    std::vector<uint32_t> set;
    uint32_t qubit = 0;
    double p_set = 0;
    double p_qubit = 0;
    double p_joint = 0;
    double rho = 0;
    /// Fisher-z 95% interval on rho.
    double rho_ci_low = 0;
    double rho_ci_high = 0;
    /// False when either marginal is 0 or 1; rho and its interval are then 0.
    bool defined = false;
};

/// rho = (P(A,B) - P(A)P(B)) / sqrt(P(A)P(B)(1-P(A))(1-P(B))), from counts.
PairCorrelation pearson_from_counts(uint64_t trials, uint64_t count_a, uint64_t count_b, uint64_t count_ab);

struct CorrelationReport {
    std::vector<double> marginals;
    std::vector<PairCorrelation> pairs;
    std::vector<PairCorrelation> set_entries;
};

/// All K(K-1)/2 pairwise coefficients. Needs trials >= 2 and a pattern histogram.
CorrelationReport pearson_pairs(const TrialStats &stats);

/// For every set of each size in [min_size, max_size] and every qubit:
/// the coefficient between "all of the set failed" and "the qubit failed".
std::vector<PairCorrelation> set_correlations(const TrialStats &stats, size_t min_size = 2, size_t max_size = 5);

std::vector<RateEstimate> per_qubit_rates(const TrialStats &stats);

struct DecayReport {
    /// p[i] for i = 1..K (p[0] unused): probability that one specific set of
    /// exactly i logical qubits is the failure set, assuming all sets of equal
    /// size are equally likely.
    std::vector<double> p;
    /// P(all of a specific i-set failed), averaged over i-sets (others free).
    std::vector<double> p_marginal;
    std::vector<uint64_t> counts;
    /// max over observed i of p_i^(1/i); 0 when nothing failed.
    double rate = 0;
    /// Same fit on p_marginal.
    double rate_marginal = 0;
    bool within_bound = true;
};

DecayReport decay_check(const TrialStats &stats);

struct CurvePoint {
    double p = 0;
    RateEstimate rate;
};

struct Crossing {
    bool found = false;
    double p = 0;
    double p_low = 0;
    double p_high = 0;
    /// Interpolated logical rate at the crossing.
    double rate = 0;
};

/// First sign change of log(rate_b) - log(rate_a) over the p values both curves
/// share, located by linear interpolation in log-log space. The interval comes
/// from repeating the search with the CI bounds swapped in (a_low vs b_high and
/// a_high vs b_low). Points with zero failures on either curve are skipped.
Crossing threshold_crossing(std::span<const CurvePoint> a, std::span<const CurvePoint> b);

}  // namespace hamsurf

#endif
