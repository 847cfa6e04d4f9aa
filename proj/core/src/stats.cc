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

#include "hamsurf/stats.h"

#include <algorithm>
#include <bit>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <optional>
#include <string>

#include "hamsurf/errors.h"

namespace hamsurf {

namespace {

double z_for(double confidence) {
    static const boost::math::normal standard;
    return boost::math::quantile(standard, 0.5 + confidence / 2);
}

double binomial(size_t n, size_t k) {
    if (k > n) {
        return 0;
    }
    double out = 1;
    for (size_t i = 1; i <= k; i++) {
        out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return out;
}

void require_patterns(const TrialStats &stats, const char *who) {
    if (!stats.has_patterns()) {
        throw PreconditionError(std::string(who) + ": needs the outcome pattern histogram (at most " +
                                std::to_string(TrialStats::kMaxPatternBits) + " logical qubits)");
    }
    if (stats.trials < 2) {
        throw PreconditionError(std::string(who) + ": needs at least 2 trials");
    }
}

// Number of trials whose failure pattern contains every bit of `mask`.
uint64_t count_superset(const TrialStats &stats, uint64_t mask) {
    uint64_t total = 0;
    for (size_t pattern = 0; pattern < stats.pattern_counts.size(); pattern++) {
        if ((pattern & mask) == mask) {
            total += stats.pattern_counts[pattern];
        }
    }
    return total;
}

std::vector<uint32_t> mask_bits(uint64_t mask) {
    std::vector<uint32_t> out;
    while (mask) {
        out.push_back(static_cast<uint32_t>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return out;
}

std::optional<double> first_crossing(std::span<const double> x, std::span<const double> ya,
                                     std::span<const double> yb) {
    for (size_t i = 0; i + 1 < x.size(); i++) {
        double f0 = yb[i] - ya[i];
        double f1 = yb[i + 1] - ya[i + 1];
        if (f0 == 0) {
            return x[i];
        }
        if ((f0 < 0) != (f1 < 0) || f1 == 0) {
            return x[i] + f0 / (f0 - f1) * (x[i + 1] - x[i]);
        }
    }
    return std::nullopt;
}

}  // namespace

std::pair<double, double> wilson_ci(uint64_t failures, uint64_t trials, double confidence) {
    if (trials < 1 || failures > trials) {
        throw ParameterError("wilson_ci: need 0 <= failures <= trials and trials >= 1, got " +
                             std::to_string(failures) + "/" + std::to_string(trials));
    }
    if (!(confidence > 0 && confidence < 1)) {
        throw ParameterError("wilson_ci: confidence must be in (0, 1)");
    }
    double z = z_for(confidence);
    double n = static_cast<double>(trials);
    double p = static_cast<double>(failures) / n;
    double z2 = z * z;
    double denom = 1 + z2 / n;
    double center = (p + z2 / (2 * n)) / denom;
    double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
    double low = failures == 0 ? 0.0 : std::max(0.0, center - half);
    double high = failures == trials ? 1.0 : std::min(1.0, center + half);
    return {std::min(low, p), std::max(high, p)};
}

RateEstimate RateEstimate::from_counts(uint64_t failures, uint64_t trials, uint64_t seed) {
    RateEstimate r;
    r.trials = trials;
    r.failures = failures;
    r.seed = seed;
    r.p_hat = static_cast<double>(failures) / static_cast<double>(trials);
    std::tie(r.ci_low, r.ci_high) = wilson_ci(failures, trials);
    return r;
}

TrialStats::TrialStats(size_t k) : num_logical(k), qubit_failures(k, 0), weight_histogram(k + 1, 0) {
    if (k <= kMaxPatternBits) {
        pattern_counts.assign(size_t{1} << k, 0);
    }
}

void TrialStats::record(std::span<const uint32_t> failed) {
    trials++;
    if (failed.empty()) {
        weight_histogram[0]++;
        if (has_patterns()) {
            pattern_counts[0]++;
        }
        return;
    }
    failures++;
    uint64_t mask = 0;
    for (uint32_t q : failed) {
        if (q >= num_logical) {
            throw IndexError("TrialStats::record: logical " + std::to_string(q) + " out of range");
        }
        qubit_failures[q]++;
        mask |= uint64_t{1} << (q & 63);
    }
    weight_histogram[failed.size()]++;
    if (has_patterns()) {
        pattern_counts[mask]++;
    }
}

void TrialStats::merge(const TrialStats &other) {
    if (other.num_logical != num_logical || other.pattern_counts.size() != pattern_counts.size()) {
        throw DimensionError("TrialStats::merge: shapes differ");
    }
    trials += other.trials;
    failures += other.failures;
    for (size_t i = 0; i < qubit_failures.size(); i++) {
        qubit_failures[i] += other.qubit_failures[i];
    }
    for (size_t i = 0; i < weight_histogram.size(); i++) {
        weight_histogram[i] += other.weight_histogram[i];
    }
    for (size_t i = 0; i < pattern_counts.size(); i++) {
        pattern_counts[i] += other.pattern_counts[i];
    }
}

PairCorrelation pearson_from_counts(uint64_t trials, uint64_t count_a, uint64_t count_b, uint64_t count_ab) {
    if (trials < 2 || count_a > trials || count_b > trials || count_ab > std::min(count_a, count_b)) {
        throw ParameterError("pearson_from_counts: inconsistent counts");
    }
    PairCorrelation c;
    double n = static_cast<double>(trials);
    c.p_set = static_cast<double>(count_a) / n;
    c.p_qubit = static_cast<double>(count_b) / n;
    c.p_joint = static_cast<double>(count_ab) / n;
    if (count_a == 0 || count_a == trials || count_b == 0 || count_b == trials) {
        return c;
    }
    c.defined = true;
    double var = c.p_set * c.p_qubit * (1 - c.p_set) * (1 - c.p_qubit);
    c.rho = std::clamp((c.p_joint - c.p_set * c.p_qubit) / std::sqrt(var), -1.0, 1.0);
    if (trials > 3 && std::abs(c.rho) < 1) {
        double z = std::atanh(c.rho);
        double half = z_for(0.95) / std::sqrt(n - 3);
        c.rho_ci_low = std::tanh(z - half);
        c.rho_ci_high = std::tanh(z + half);
    } else {
        c.rho_ci_low = trials > 3 ? c.rho : -1.0;
        c.rho_ci_high = trials > 3 ? c.rho : 1.0;
    }
    return c;
}

CorrelationReport pearson_pairs(const TrialStats &stats) {
    require_patterns(stats, "pearson_pairs");
    CorrelationReport report;
    size_t k = stats.num_logical;
    for (size_t i = 0; i < k; i++) {
        report.marginals.push_back(static_cast<double>(stats.qubit_failures[i]) / static_cast<double>(stats.trials));
    }
    for (size_t i = 0; i < k; i++) {
        for (size_t j = i + 1; j < k; j++) {
            uint64_t joint = count_superset(stats, (uint64_t{1} << i) | (uint64_t{1} << j));
            auto c = pearson_from_counts(stats.trials, stats.qubit_failures[i], stats.qubit_failures[j], joint);
            c.set = {static_cast<uint32_t>(i), static_cast<uint32_t>(j)};
            c.qubit = static_cast<uint32_t>(j);
            report.pairs.push_back(std::move(c));
        }
    }
    return report;
}

std::vector<PairCorrelation> set_correlations(const TrialStats &stats, size_t min_size, size_t max_size) {
    require_patterns(stats, "set_correlations");
    if (min_size < 1 || min_size > max_size) {
        throw ParameterError("set_correlations: need 1 <= min_size <= max_size");
    }
    size_t k = stats.num_logical;
    std::vector<PairCorrelation> out;
    for (size_t size = min_size; size <= std::min(max_size, k); size++) {
        for (uint64_t mask = 0; mask < (uint64_t{1} << k); mask++) {
            if (static_cast<size_t>(std::popcount(mask)) != size) {
                continue;
            }
            uint64_t count_set = count_superset(stats, mask);
            for (size_t q = 0; q < k; q++) {
                uint64_t joint = count_superset(stats, mask | (uint64_t{1} << q));
                auto c = pearson_from_counts(stats.trials, count_set, stats.qubit_failures[q], joint);
                c.set = mask_bits(mask);
                c.qubit = static_cast<uint32_t>(q);
                out.push_back(std::move(c));
            }
        }
    }
    return out;
}

std::vector<RateEstimate> per_qubit_rates(const TrialStats &stats) {
    if (stats.trials < 1) {
        throw PreconditionError("per_qubit_rates: no trials recorded");
    }
    std::vector<RateEstimate> out;
    for (uint64_t f : stats.qubit_failures) {
        out.push_back(RateEstimate::from_counts(f, stats.trials));
    }
    return out;
}

DecayReport decay_check(const TrialStats &stats) {
    if (stats.trials < 1) {
        throw PreconditionError("decay_check: no trials recorded");
    }
    size_t k = stats.num_logical;
    DecayReport report;
    report.p.assign(k + 1, 0.0);
    report.counts = stats.weight_histogram;
    double n = static_cast<double>(stats.trials);
    for (size_t i = 1; i <= k; i++) {
        report.p[i] = static_cast<double>(stats.weight_histogram[i]) / (n * binomial(k, i));
        if (stats.weight_histogram[i] > 0) {
            report.rate = std::max(report.rate, std::pow(report.p[i], 1.0 / static_cast<double>(i)));
        }
    }
    if (stats.has_patterns()) {
        report.p_marginal.assign(k + 1, 0.0);
        for (size_t pattern = 1; pattern < stats.pattern_counts.size(); pattern++) {
            size_t w = static_cast<size_t>(std::popcount(static_cast<uint64_t>(pattern)));
            for (size_t i = 1; i <= w; i++) {
                report.p_marginal[i] += static_cast<double>(stats.pattern_counts[pattern]) * binomial(w, i);
            }
        }
        for (size_t i = 1; i <= k; i++) {
            report.p_marginal[i] /= n * binomial(k, i);
            if (report.p_marginal[i] > 0) {
                report.rate_marginal =
                    std::max(report.rate_marginal, std::pow(report.p_marginal[i], 1.0 / static_cast<double>(i)));
            }
        }
    }
    for (size_t i = 1; i <= k; i++) {
        // Relative slack absorbs pow/root rounding at the maximizing i.
        if (report.p[i] > std::pow(report.rate, static_cast<double>(i)) * (1 + 1e-12)) {
            report.within_bound = false;
        }
    }
    return report;
}

Crossing threshold_crossing(std::span<const CurvePoint> a, std::span<const CurvePoint> b) {
    std::vector<double> x;
    std::vector<double> ya, yb, ya_low, ya_high, yb_low, yb_high;
    for (const auto &pa : a) {
        for (const auto &pb : b) {
            if (pa.p != pb.p || pa.p <= 0 || pa.rate.failures == 0 || pb.rate.failures == 0) {
                continue;
            }
            x.push_back(std::log(pa.p));
            ya.push_back(std::log(pa.rate.p_hat));
            yb.push_back(std::log(pb.rate.p_hat));
            ya_low.push_back(std::log(pa.rate.ci_low));
            ya_high.push_back(std::log(pa.rate.ci_high));
            yb_low.push_back(std::log(pb.rate.ci_low));
            yb_high.push_back(std::log(pb.rate.ci_high));
        }
    }
    std::vector<size_t> order(x.size());
    for (size_t i = 0; i < order.size(); i++) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](size_t i, size_t j) { return x[i] < x[j]; });
    auto permute = [&](std::vector<double> &v) {
        std::vector<double> out;
        for (size_t i : order) {
            out.push_back(v[i]);
        }
        v = std::move(out);
    };
    for (auto *v : {&x, &ya, &yb, &ya_low, &ya_high, &yb_low, &yb_high}) {
        permute(*v);
    }

    Crossing c;
    auto center = first_crossing(x, ya, yb);
    if (!center) {
        return c;
    }
    c.found = true;
    c.p = std::exp(*center);
    c.p_low = c.p;
    c.p_high = c.p;
    for (auto bound : {first_crossing(x, ya_low, yb_high), first_crossing(x, ya_high, yb_low)}) {
        if (bound) {
            c.p_low = std::min(c.p_low, std::exp(*bound));
            c.p_high = std::max(c.p_high, std::exp(*bound));
        } else {
            // The band never separates on this side: widen to the sampled range.
            c.p_low = std::min(c.p_low, std::exp(x.front()));
            c.p_high = std::max(c.p_high, std::exp(x.back()));
        }
    }
    for (size_t i = 0; i + 1 < x.size(); i++) {
        if (*center >= x[i] && *center <= x[i + 1]) {
            double t = x[i + 1] == x[i] ? 0 : (*center - x[i]) / (x[i + 1] - x[i]);
            c.rate = std::exp(ya[i] + t * (ya[i + 1] - ya[i]));
            break;
        }
    }
    if (x.size() == 1) {
        c.rate = std::exp(ya[0]);
    }
    return c;
}

}  // namespace hamsurf
