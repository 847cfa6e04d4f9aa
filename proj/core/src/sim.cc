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

#include "hamsurf/sim.h"

#include <algorithm>
#include <charconv>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <thread>

#include "hamsurf/decode.h"
#include "hamsurf/errors.h"
#include "hamsurf/surface_decoder.h"

namespace hamsurf {

namespace {

std::string shortest(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void check_probability(double p, const char *who) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ParameterError(std::string(who) + ": p = " + shortest(p) + " outside [0, 1]");
    }
}

void check_trials(uint64_t trials, const char *who) {
    if (trials < 1) {
        throw ParameterError(std::string(who) + ": trials must be >= 1");
    }
}

template <class T>
T parse_field(const std::string &field, size_t row, const char *name) {
    T value{};
    auto res = std::from_chars(field.data(), field.data() + field.size(), value);
    if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
        throw ParseError("surface rate table row " + std::to_string(row) + ": bad " + name + " '" + field + "'");
    }
    return value;
}

TrialBody hamming_worker(const FrameDecoder &decoder, double p) {
    auto ws = std::make_shared<FrameDecoder::Workspace>(decoder.make_workspace());
    auto flips = std::make_shared<std::vector<uint32_t>>();
    auto failed = std::make_shared<std::vector<uint32_t>>();
    size_t n = decoder.schema().base_registers;
    return [&decoder, ws, flips, failed, n, p](std::mt19937_64 &engine, TrialStats &stats) {
        flips->clear();
        sample_flips(n, p, engine, *flips);
        decoder.decode_sparse(*flips, *ws, *failed);
        stats.record(*failed);
    };
}

}  // namespace

size_t resolve_worker_count(size_t workers) {
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    return workers;
}

TrialStats run_trials(size_t num_logical, uint64_t trials, uint64_t seed, size_t workers,
                      const std::function<TrialBody()> &make_worker) {
    uint64_t streams = (trials + kTrialsPerStream - 1) / kTrialsPerStream;
    workers = std::min<uint64_t>(resolve_worker_count(workers), std::max<uint64_t>(streams, 1));
    std::vector<TrialStats> parts(workers, TrialStats(num_logical));
    uint64_t chunk = (streams + workers - 1) / workers;
    auto run_chunk = [&](size_t w) {
        TrialBody body = make_worker();
        for (uint64_t s = w * chunk; s < std::min(streams, (w + 1) * chunk); s++) {
            auto engine = stream_engine(seed, s);
            uint64_t end = std::min(trials, (s + 1) * kTrialsPerStream);
            for (uint64_t t = s * kTrialsPerStream; t < end; t++) {
                body(engine, parts[w]);
            }
        }
    };
    if (workers == 1) {
        run_chunk(0);
    } else {
        std::vector<std::exception_ptr> errors(workers);
        {
            std::vector<std::jthread> pool;
            for (size_t w = 0; w < workers; w++) {
                pool.emplace_back([&, w] {
                    try {
                        run_chunk(w);
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
        }
        for (auto &e : errors) {
            if (e) {
                std::rethrow_exception(e);
            }
        }
    }
    TrialStats total(num_logical);
    for (const auto &part : parts) {
        total.merge(part);
    }
    return total;
}

CampaignResult run_hamming_campaign(int level, double p, uint64_t trials, uint64_t seed, BaseCode base,
                                    size_t workers, LogicalBasis basis) {
    check_probability(p, "run_hamming_campaign");
    check_trials(trials, "run_hamming_campaign");
    if (base.kind == BaseKind::surface) {
        throw ParameterError("run_hamming_campaign: use run_surface_hamming_campaign for a surface base");
    }
    FrameDecoder decoder(build_schema(level, base, basis));
    CampaignResult out;
    out.stats = run_trials(decoder.schema().total_logical, trials, seed, workers,
                           [&] { return hamming_worker(decoder, p); });
    out.rate = RateEstimate::from_counts(out.stats.failures, out.stats.trials, seed);
    return out;
}

RateEstimate estimate_surface_rate(int d, double p, uint64_t trials, uint64_t seed, size_t workers,
                                   bool allow_even) {
    check_probability(p, "estimate_surface_rate");
    check_trials(trials, "estimate_surface_rate");
    SurfaceDecoder decoder(build_surface(d, allow_even));
    size_t n = decoder.lattice().n_data;
    auto make = [&]() -> TrialBody {
        auto flips = std::make_shared<std::vector<uint32_t>>();
        return [&decoder, flips, n, p](std::mt19937_64 &engine, TrialStats &stats) {
            flips->clear();
            sample_flips(n, p, engine, *flips);
            static constexpr uint32_t kOnlyQubit = 0;
            if (!flips->empty() && decoder.fails_sparse(*flips)) {
                stats.record(std::span<const uint32_t>(&kOnlyQubit, 1));
            } else {
                stats.record({});
            }
        };
    };
    TrialStats stats = run_trials(1, trials, seed, workers, make);
    return RateEstimate::from_counts(stats.failures, stats.trials, seed);
}

void SurfaceRateTable::insert(int d, double p, const RateEstimate &rate) {
    entries_[{d, p}] = rate;
}

bool SurfaceRateTable::contains(int d, double p) const {
    return entries_.count({d, p}) != 0;
}

const RateEstimate &SurfaceRateTable::lookup(int d, double p) const {
    auto it = entries_.find({d, p});
    if (it == entries_.end()) {
        throw PreconditionError("surface rate table has no entry for d = " + std::to_string(d) +
                                ", p = " + shortest(p));
    }
    return it->second;
}

void SurfaceRateTable::write_csv(std::ostream &out) const {
    out << "d,p,trials,failures,p_logical,ci_low,ci_high,seed\n";
    for (const auto &[key, r] : entries_) {
        out << key.first << ',' << shortest(key.second) << ',' << r.trials << ',' << r.failures << ','
            << shortest(r.p_hat) << ',' << shortest(r.ci_low) << ',' << shortest(r.ci_high) << ',' << r.seed << '\n';
    }
}

SurfaceRateTable SurfaceRateTable::read_csv(std::istream &in) {
    SurfaceRateTable table;
    std::string line;
    size_t row = 0;
    if (!std::getline(in, line)) {
        throw ParseError("surface rate table: empty input");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != "d,p,trials,failures,p_logical,ci_low,ci_high,seed") {
        throw ParseError("surface rate table row 1: unexpected header '" + line + "'");
    }
    row = 1;
    while (std::getline(in, line)) {
        row++;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            fields.push_back(field);
        }
        if (fields.size() != 8) {
            throw ParseError("surface rate table row " + std::to_string(row) + ": expected 8 fields, got " +
                             std::to_string(fields.size()));
        }
        int d = parse_field<int>(fields[0], row, "d");
        double p = parse_field<double>(fields[1], row, "p");
        auto trials = parse_field<uint64_t>(fields[2], row, "trials");
        auto failures = parse_field<uint64_t>(fields[3], row, "failures");
        auto seed = parse_field<uint64_t>(fields[7], row, "seed");
        if (trials < 1 || failures > trials) {
            throw ParseError("surface rate table row " + std::to_string(row) + ": inconsistent counts");
        }
        table.insert(d, p, RateEstimate::from_counts(failures, trials, seed));
    }
    return table;
}

CampaignResult run_surface_hamming_campaign(int d, int level, double p, uint64_t trials, uint64_t seed,
                                            const SurfaceRateTable &table, size_t workers) {
    check_probability(p, "run_surface_hamming_campaign");
    check_trials(trials, "run_surface_hamming_campaign");
    if (level < 1) {
        throw ParameterError("run_surface_hamming_campaign: level must be >= 1");
    }
    double p_sur = table.lookup(d, p).p_hat;
    FrameDecoder decoder(build_schema(level, BaseCode::surface(d)));
    CampaignResult out;
    out.stats = run_trials(decoder.schema().total_logical, trials, seed, workers,
                           [&] { return hamming_worker(decoder, p_sur); });
    out.rate = RateEstimate::from_counts(out.stats.failures, out.stats.trials, seed);
    return out;
}

}  // namespace hamsurf
