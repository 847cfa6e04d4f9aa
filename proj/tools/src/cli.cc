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


#include "hamsurf/cli/cli.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hamsurf/cli/bench.h"
#include "hamsurf/cli/csv.h"
#include "hamsurf/cli/manifest.h"
#include "hamsurf/cli/svg.h"
#include "hamsurf/codes.h"
#include "hamsurf/concat.h"
#include "hamsurf/errors.h"
#include "hamsurf/gf2.h"
#include "hamsurf/logical.h"
#include "hamsurf/reference_logicals.h"
#include "hamsurf/sim.h"
#include "hamsurf/stats.h"

#ifndef HAMSURF_VERSION
#define HAMSURF_VERSION "unknown"
#endif

namespace hamsurf::cli {

namespace {

// Offset between the Hamming-stage seed and the surface-stage seed of a
// surface-Hamming sweep, so the two stages never share streams.
constexpr uint64_t kSurfaceSeedOffset = 0x9E3779B97F4A7C15ull;

std::string fmt(double v) {
    return format_double(v);
}

std::string join_ints(const std::vector<uint32_t> &v) {
    std::string s;
    for (size_t i = 0; i < v.size(); i++) {
        s += (i ? " " : "") + std::to_string(v[i]);
    }
    return s;
}

std::vector<std::string> rate_cells(const RateEstimate &r) {
    return {std::to_string(r.trials), std::to_string(r.failures), fmt(r.p_hat), fmt(r.ci_low), fmt(r.ci_high),
            std::to_string(r.seed)};
}

struct Context {
    std::ostream &out;
    std::ostream &err;
    std::vector<std::string> outputs;

    void emit_text(const std::string &text, const std::string &path) {
        if (path.empty()) {
            out << text;
            return;
        }
        std::ofstream file(path, std::ios::binary);
        if (!file) {
            throw ParameterError("--out: cannot write '" + path + "'");
        }
        file << text;
        outputs.push_back(path);
    }
    void emit(const CsvTable &table, const std::string &path) {
        emit_text(table.to_string(), path);
    }
};

struct Common {
    uint64_t seed = 1;
    size_t workers = 0;
    std::string out;
};

void add_common(CLI::App *sub, Common &c, bool with_seed = true) {
    if (with_seed) {
        sub->add_option("--seed", c.seed, "RNG seed");
        sub->add_option("--workers", c.workers, "Worker threads, 0 = all cores (default: $HAMSURF_WORKERS)");
    }
    sub->add_option("--out", c.out, "Output file (default: stdout); also writes <out>.manifest.json");
}

void check_p(double p, const std::string &flag) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ParameterError(flag + ": " + fmt(p) + " is outside [0, 1]");
    }
}

void check_levels(const std::vector<int> &levels, int min_level, const std::string &flag) {
    if (levels.empty()) {
        throw ParameterError(flag + ": at least one level is required");
    }
    for (int l : levels) {
        if (l < min_level || l > 3) {
            throw ParameterError(flag + ": level " + std::to_string(l) + " outside [" + std::to_string(min_level) +
                                 ", 3]");
        }
    }
}

BaseCode hamming_base(const std::string &code, const std::string &flag) {
    if (code == "hamming") {
        return BaseCode::steane();
    }
    if (code == "bare-hamming") {
        return BaseCode::bare();
    }
    throw ParameterError(flag + ": unknown code '" + code + "'");
}

// ---- sweep ----

struct SweepOptions {
    std::string code = "hamming";
    std::vector<int> d;
    std::vector<int> levels = {1, 2, 3};
    std::string p = "0.01:0.04";
    size_t points = 8;
    uint64_t trials = 100000;
    std::vector<uint64_t> trials_per_level;
    uint64_t surface_trials = 0;
    std::string surface_rates;
    std::string surface_rates_out;
    bool allow_even = false;
    bool progress = false;
    Common c;
};

void run_sweep(const SweepOptions &o, Context &ctx) {
    bool surface = o.code == "surface-hamming";
    BaseCode base;
    if (!surface) {
        base = hamming_base(o.code, "--code");
        if (!o.d.empty()) {
            throw ParameterError("--d: only applies to --code surface-hamming");
        }
    } else if (o.d.empty()) {
        throw ParameterError("--d: required for --code surface-hamming");
    }
    check_levels(o.levels, 1, "--levels");
    if (!o.trials_per_level.empty() && o.trials_per_level.size() != o.levels.size()) {
        throw ParameterError("--trials-per-level: needs one count per entry of --levels");
    }
    if (o.trials < 1) {
        throw ParameterError("--trials: must be >= 1");
    }
    auto grid = parse_p_grid(o.p, o.points);

    SurfaceRateTable rates;
    if (surface) {
        if (!o.surface_rates.empty()) {
            std::ifstream in(o.surface_rates, std::ios::binary);
            if (!in) {
                throw ParameterError("--surface-rates: cannot open '" + o.surface_rates + "'");
            }
            rates = SurfaceRateTable::read_csv(in);
            for (int d : o.d) {
                for (double p : grid) {
                    if (!rates.contains(d, p)) {
                        throw PreconditionError("--surface-rates: no entry for d = " + std::to_string(d) +
                                                ", p = " + fmt(p));
                    }
                }
            }
        } else {
            uint64_t st = o.surface_trials ? o.surface_trials : o.trials;
            for (int d : o.d) {
                for (double p : grid) {
                    rates.insert(d, p,
                                 estimate_surface_rate(d, p, st, o.c.seed + kSurfaceSeedOffset, o.c.workers,
                                                       o.allow_even));
                    if (o.progress) {
                        ctx.err << "surface d=" << d << " p=" << fmt(p) << " P_sur=" << fmt(rates.lookup(d, p).p_hat)
                                << '\n';
                    }
                }
            }
        }
        if (!o.surface_rates_out.empty()) {
            std::ostringstream text;
            rates.write_csv(text);
            ctx.emit_text(text.str(), o.surface_rates_out);
        }
    }

    CsvTable table({"code", "d", "level", "p", "trials", "failures", "p_logical", "ci_low", "ci_high", "seed"});
    std::vector<int> ds = surface ? o.d : std::vector<int>{0};
    for (int d : ds) {
        for (size_t li = 0; li < o.levels.size(); li++) {
            int level = o.levels[li];
            uint64_t trials = o.trials_per_level.empty() ? o.trials : o.trials_per_level[li];
            for (double p : grid) {
                CampaignResult r = surface
                                       ? run_surface_hamming_campaign(d, level, p, trials, o.c.seed, rates, o.c.workers)
                                       : run_hamming_campaign(level, p, trials, o.c.seed, base, o.c.workers);
                std::vector<std::string> row = {o.code, surface ? std::to_string(d) : "", std::to_string(level),
                                                fmt(p)};
                auto cells = rate_cells(r.rate);
                row.insert(row.end(), cells.begin(), cells.end());
                table.add_row(std::move(row));
                if (o.progress) {
                    ctx.err << o.code << " d=" << d << " level=" << level << " p=" << fmt(p) << " -> "
                            << r.rate.failures << "/" << r.rate.trials << '\n';
                }
            }
        }
    }
    ctx.emit(table, o.c.out);
}

// ---- threshold ----

struct ThresholdOptions {
    std::string in;
    Common c;
};

void run_threshold(const ThresholdOptions &o, Context &ctx) {
    CsvTable sweep = read_csv_file(o.in);
    size_t code_c = sweep.column("code");
    size_t d_c = sweep.column("d");
    size_t level_c = sweep.column("level");
    size_t p_c = sweep.column("p");
    size_t trials_c = sweep.column("trials");
    size_t failures_c = sweep.column("failures");
    size_t seed_c = sweep.column("seed");

    // (code, d) in order of first appearance -> level -> curve.
    std::vector<std::pair<std::string, std::string>> keys;
    std::map<std::pair<std::string, std::string>, std::map<int, std::vector<CurvePoint>>> curves;
    for (size_t r = 0; r < sweep.num_rows(); r++) {
        auto key = std::make_pair(sweep.cell(r, code_c), sweep.cell(r, d_c));
        if (!curves.count(key)) {
            keys.push_back(key);
        }
        int level = static_cast<int>(parse_double_cell(sweep.cell(r, level_c), r, "level"));
        auto trials = static_cast<uint64_t>(parse_double_cell(sweep.cell(r, trials_c), r, "trials"));
        auto failures = static_cast<uint64_t>(parse_double_cell(sweep.cell(r, failures_c), r, "failures"));
        auto seed = static_cast<uint64_t>(parse_double_cell(sweep.cell(r, seed_c), r, "seed"));
        if (trials < 1 || failures > trials) {
            throw ParseError("csv data row " + std::to_string(r + 1) + ": inconsistent trials/failures");
        }
        CurvePoint pt;
        pt.p = parse_double_cell(sweep.cell(r, p_c), r, "p");
        pt.rate = RateEstimate::from_counts(failures, trials, seed);
        curves[key][level].push_back(pt);
    }

    CsvTable table(
        {"code", "d", "level_a", "level_b", "found", "p_th", "p_th_low", "p_th_high", "p_logical_at_crossing"});
    for (const auto &key : keys) {
        const auto &by_level = curves[key];
        for (auto it = by_level.begin(); std::next(it) != by_level.end(); ++it) {
            auto next = std::next(it);
            Crossing x = threshold_crossing(it->second, next->second);
            std::vector<std::string> row = {key.first, key.second, std::to_string(it->first),
                                            std::to_string(next->first), x.found ? "1" : "0"};
            if (x.found) {
                row.insert(row.end(), {fmt(x.p), fmt(x.p_low), fmt(x.p_high), fmt(x.rate)});
            } else {
                row.insert(row.end(), {"", "", "", ""});
            }
            table.add_row(std::move(row));
        }
    }
    ctx.emit(table, o.c.out);
}

// ---- correlations / perqubit / decay ----

struct SmallCampaignOptions {
    std::string code = "bare-hamming";
    std::string basis = "reference";
    int level = 1;
    double p = 0.08;
    uint64_t trials = 20000;
    Common c;
};

void add_small_campaign(CLI::App *sub, SmallCampaignOptions &o) {
    sub->add_option("--code", o.code, "hamming (Steane base) or bare-hamming (physical base)")
        ->check(CLI::IsMember({"hamming", "bare-hamming"}));
    sub->add_option("--level", o.level, "Top Hamming level");
    sub->add_option("--basis", o.basis, "Logical basis: reference (tabulated, levels <= 2) or extracted")
        ->check(CLI::IsMember({"reference", "extracted"}));
    sub->add_option("--p", o.p, "Physical bit-flip probability");
    sub->add_option("--trials", o.trials, "Monte Carlo trials");
    add_common(sub, o.c);
}

TrialStats small_campaign(const SmallCampaignOptions &o) {
    check_p(o.p, "--p");
    check_levels({o.level}, o.code == "hamming" ? 0 : 1, "--level");
    if (o.trials < 1) {
        throw ParameterError("--trials: must be >= 1");
    }
    auto basis = o.basis == "reference" ? LogicalBasis::reference : LogicalBasis::extracted;
    if (basis == LogicalBasis::reference && o.level > 2) {
        throw ParameterError("--basis: reference logicals exist for levels <= 2 only");
    }
    return run_hamming_campaign(o.level, o.p, o.trials, o.c.seed, hamming_base(o.code, "--code"), o.c.workers, basis)
        .stats;
}

struct CorrelationOptions {
    SmallCampaignOptions s;
    size_t max_set = 5;
};

void run_correlations(const CorrelationOptions &o, Context &ctx) {
    TrialStats stats = small_campaign(o.s);
    if (!stats.has_patterns()) {
        throw ParameterError("--level: " + std::to_string(stats.num_logical) +
                             " logical qubits is too many for correlation analysis");
    }
    CsvTable table(
        {"kind", "set", "qubit", "p_set", "p_qubit", "p_joint", "rho", "rho_ci_low", "rho_ci_high", "defined"});
    auto add = [&table](const std::string &kind, const PairCorrelation &c) {
        table.add_row({kind, join_ints(c.set), std::to_string(c.qubit), fmt(c.p_set), fmt(c.p_qubit), fmt(c.p_joint),
                       fmt(c.rho), fmt(c.rho_ci_low), fmt(c.rho_ci_high), c.defined ? "1" : "0"});
    };
    for (const auto &c : pearson_pairs(stats).pairs) {
        add("pair", c);
    }
    if (o.max_set >= 2) {
        for (const auto &c : set_correlations(stats, 2, o.max_set)) {
            add("set", c);
        }
    }
    ctx.emit(table, o.s.c.out);
}

void run_perqubit(const SmallCampaignOptions &o, Context &ctx) {
    TrialStats stats = small_campaign(o);
    CsvTable table({"qubit", "trials", "failures", "p_logical", "ci_low", "ci_high"});
    auto rates = per_qubit_rates(stats);
    for (size_t i = 0; i < rates.size(); i++) {
        const auto &r = rates[i];
        table.add_row({std::to_string(i), std::to_string(r.trials), std::to_string(r.failures), fmt(r.p_hat),
                       fmt(r.ci_low), fmt(r.ci_high)});
    }
    ctx.emit(table, o.c.out);
}

void run_decay(const SmallCampaignOptions &o, Context &ctx) {
    TrialStats stats = small_campaign(o);
    DecayReport report = decay_check(stats);
    CsvTable table({"i", "count", "p_i", "p_i_marginal", "bound_i", "within", "rate"});
    for (size_t i = 1; i < report.p.size(); i++) {
        double bound = std::pow(report.rate, static_cast<double>(i));
        bool within = report.p[i] <= bound * (1 + 1e-12);
        table.add_row({std::to_string(i), std::to_string(report.counts[i]), fmt(report.p[i]),
                       fmt(report.p_marginal[i]), fmt(bound), within ? "1" : "0", fmt(report.rate)});
    }
    ctx.emit(table, o.c.out);
}

// ---- overhead / logicals ----

struct OverheadOptions {
    std::vector<int> d = {3, 4, 5};
    int levels = 3;
    Common c;
};

void run_overhead(const OverheadOptions &o, Context &ctx) {
    if (o.levels < 0) {
        throw ParameterError("--levels: must be >= 0");
    }
    CsvTable table({"d", "level", "overhead_exact", "overhead_rounded"});
    for (int d : o.d) {
        if (d < 2) {
            throw ParameterError("--d: distance " + std::to_string(d) + " must be >= 2");
        }
        for (int l = 0; l <= o.levels; l++) {
            OverheadRow row = overhead(d, l);
            table.add_row({std::to_string(d), std::to_string(l), fmt(row.overhead_exact),
                           std::to_string(row.overhead_rounded)});
        }
    }
    ctx.emit(table, o.c.out);
}

struct LogicalsOptions {
    std::vector<int> r = {3, 4, 5};
    std::string source = "both";
    Common c;
};

void run_logicals(const LogicalsOptions &o, Context &ctx) {
    CsvTable table({"r", "source", "row", "support", "valid"});
    for (int r : o.r) {
        if (r < 3 || r > 5) {
            throw ParameterError("--r: " + std::to_string(r) + " outside [3, 5]");
        }
        BitMatrix h = hamming_check_matrix(r);
        std::vector<std::pair<std::string, BitMatrix>> sources;
        if (o.source == "reference" || o.source == "both") {
            sources.emplace_back("reference", reference_logicals(r));
        }
        if (o.source == "extracted" || o.source == "both") {
            sources.emplace_back("extracted",
                                 extract_logicals(GeneratorSet::from_css_codewords(kernel_basis(h))).z_logicals);
        }
        for (const auto &[name, l] : sources) {
            std::string valid = validate_logicals(h, l) ? "1" : "0";
            for (size_t i = 0; i < l.num_rows(); i++) {
                std::string bits;
                for (size_t j = 0; j < l.num_cols(); j++) {
                    bits += l.get(i, j) ? '1' : '0';
                }
                table.add_row({std::to_string(r), name, std::to_string(i), bits, valid});
            }
        }
    }
    ctx.emit(table, o.c.out);
}

// ---- surface-rate ----

struct SurfaceRateOptions {
    std::vector<int> d = {3, 5, 7};
    std::string p = "0.01:0.1";
    size_t points = 8;
    uint64_t trials = 100000;
    bool allow_even = false;
    Common c;
};

void run_surface_rate(const SurfaceRateOptions &o, Context &ctx) {
    if (o.trials < 1) {
        throw ParameterError("--trials: must be >= 1");
    }
    auto grid = parse_p_grid(o.p, o.points);
    SurfaceRateTable table;
    for (int d : o.d) {
        if (d < 2 || (d % 2 == 0 && !o.allow_even)) {
            throw ParameterError("--d: distance " + std::to_string(d) + " needs to be odd and >= 3 (see --allow-even)");
        }
        for (double p : grid) {
            table.insert(d, p, estimate_surface_rate(d, p, o.trials, o.c.seed, o.c.workers, o.allow_even));
        }
    }
    std::ostringstream text;
    table.write_csv(text);
    ctx.emit_text(text.str(), o.c.out);
}

// ---- bench ----

struct BenchOptions {
    std::string pairs = "1:5,2:7,3:9";
    double p = 0.01526;
    uint64_t trials = 100000;
    uint64_t warmup = 100;
    Common c;
};

std::vector<std::pair<int, int>> parse_pairs(const std::string &spec) {
    std::vector<std::pair<int, int>> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        int level = 0, d = 0;
        bool ok = colon != std::string::npos;
        if (ok) {
            auto a = std::from_chars(item.data(), item.data() + colon, level);
            auto b = std::from_chars(item.data() + colon + 1, item.data() + item.size(), d);
            ok = a.ec == std::errc() && a.ptr == item.data() + colon && b.ec == std::errc() &&
                 b.ptr == item.data() + item.size();
        }
        if (!ok || level < 1 || level > 3 || d < 3 || d % 2 == 0) {
            throw ParameterError("--pairs: bad entry '" + item + "' (want level:d, level in [1, 3], odd d >= 3)");
        }
        out.emplace_back(level, d);
    }
    if (out.empty()) {
        throw ParameterError("--pairs: empty");
    }
    return out;
}

void run_bench(const BenchOptions &o, Context &ctx) {
    check_p(o.p, "--p");
    BenchConfig config;
    config.pairs = parse_pairs(o.pairs);
    config.p = o.p;
    config.trials = o.trials;
    config.warmup = o.warmup;
    config.seed = o.c.seed;
    config.workers = o.c.workers;
    CsvTable table({"decoder", "mode", "trials", "mean_ns", "stddev_ns", "sample_ns"});
    for (const auto &r : bench_decoders(config)) {
        table.add_row({r.decoder, r.mode, std::to_string(r.trials), fmt(r.mean_ns), fmt(r.stddev_ns), fmt(r.sample_ns)});
    }
    ctx.emit(table, o.c.out);
}

// ---- plot ----

struct PlotCliOptions {
    std::string in;
    std::string group;
    PlotOptions plot;
    Common c;
};

void run_plot(const PlotCliOptions &o, Context &ctx) {
    PlotOptions plot = o.plot;
    std::stringstream ss(o.group);
    std::string g;
    while (std::getline(ss, g, ',')) {
        if (!g.empty()) {
            plot.group.push_back(g);
        }
    }
    emit_svg(o.in, o.c.out, plot);
    ctx.outputs.push_back(o.c.out);
}

std::map<std::string, std::string> collect_params(const CLI::App *sub) {
    std::map<std::string, std::string> params;
    for (const CLI::Option *opt : sub->get_options()) {
        std::string name = opt->get_name();
        if (name == "--help") {
            continue;
        }
        std::string value;
        if (opt->count() > 0) {
            const auto &results = opt->results();
            for (size_t i = 0; i < results.size(); i++) {
                value += (i ? "," : "") + results[i];
            }
        } else {
            value = opt->get_default_str();
        }
        params[name] = value;
    }
    return params;
}

}  // namespace

std::vector<double> parse_p_grid(const std::string &spec, size_t points, const std::string &flag) {
    auto number = [&flag](const std::string &s) {
        double v = 0;
        auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
            throw ParameterError(flag + ": '" + s + "' is not a number");
        }
        check_p(v, flag);
        return v;
    };
    std::vector<double> grid;
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        double a = number(spec.substr(0, colon));
        double b = number(spec.substr(colon + 1));
        if (!(a > 0 && a < b)) {
            throw ParameterError(flag + ": range needs 0 < a < b");
        }
        if (points < 2) {
            throw ParameterError("--points: a range needs at least 2 points");
        }
        for (size_t i = 0; i < points; i++) {
            double t = static_cast<double>(i) / static_cast<double>(points - 1);
            double v = std::exp(std::log(a) + t * (std::log(b) - std::log(a)));
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.6g", v);
            grid.push_back(std::strtod(buf, nullptr));
        }
        grid.front() = a;
        grid.back() = b;
    } else {
        std::stringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, ',')) {
            grid.push_back(number(item));
        }
        if (grid.empty()) {
            throw ParameterError(flag + ": empty grid");
        }
    }
    return grid;
}

size_t default_workers() {
    const char *env = std::getenv("HAMSURF_WORKERS");
    if (env == nullptr || *env == '\0') {
        return 0;
    }
    size_t v = 0;
    std::string s(env);
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw ParameterError("HAMSURF_WORKERS: '" + s + "' is not a worker count");
    }
    return v;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Monte Carlo simulation of concatenated quantum Hamming and surface-Hamming codes", "hamsurf"};
    app.set_version_flag("--version", HAMSURF_VERSION);
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();

    size_t workers = 0;
    try {
        workers = default_workers();
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    SweepOptions sweep;
    ThresholdOptions threshold;
    CorrelationOptions correlations;
    SmallCampaignOptions decay;
    SmallCampaignOptions perqubit;
    OverheadOptions overhead_opts;
    LogicalsOptions logicals;
    SurfaceRateOptions surface_rate;
    BenchOptions bench;
    PlotCliOptions plot;
    std::string replay_manifest;
    std::string replay_out;
    for (Common *c : {&sweep.c, &correlations.s.c, &decay.c, &perqubit.c, &surface_rate.c, &bench.c}) {
        c->workers = workers;
    }

    auto *s = app.add_subcommand("sweep", "Logical error rate curves for concatenated codes");
    s->add_option("--code", sweep.code, "hamming, bare-hamming or surface-hamming")
        ->check(CLI::IsMember({"hamming", "bare-hamming", "surface-hamming"}));
    s->add_option("--d", sweep.d, "Surface distances (surface-hamming only)")->delimiter(',');
    s->add_option("--levels", sweep.levels, "Hamming levels")->delimiter(',');
    s->add_option("--p", sweep.p, "p grid: value, list a,b,c or log range a:b");
    s->add_option("--points", sweep.points, "Points in a log range");
    s->add_option("--trials", sweep.trials, "Trials per point");
    s->add_option("--trials-per-level", sweep.trials_per_level, "Trials per point, one per entry of --levels")
        ->delimiter(',');
    s->add_option("--surface-trials", sweep.surface_trials, "Trials per P_sur estimate (default: --trials)");
    s->add_option("--surface-rates", sweep.surface_rates, "Precomputed P_sur table (CSV from surface-rate)");
    s->add_option("--surface-rates-out", sweep.surface_rates_out, "Write the P_sur table used");
    s->add_flag("--allow-even", sweep.allow_even, "Allow even surface distances");
    s->add_flag("--progress", sweep.progress, "Print progress to stderr");
    add_common(s, sweep.c);

    auto *t = app.add_subcommand("threshold", "Crossings of successive-level curves in a sweep CSV");
    t->add_option("--in", threshold.in, "Sweep CSV")->required();
    add_common(t, threshold.c, false);

    auto *c = app.add_subcommand("correlations", "Pairwise and set-vs-qubit Pearson correlations");
    add_small_campaign(c, correlations.s);
    c->add_option("--max-set", correlations.max_set, "Largest set size for set-vs-qubit rows (< 2: pairs only)");

    auto *dcy = app.add_subcommand("decay", "Locally decaying error check");
    add_small_campaign(dcy, decay);

    auto *pq = app.add_subcommand("perqubit", "Per-logical-qubit error rates");
    add_small_campaign(pq, perqubit);

    auto *ov = app.add_subcommand("overhead", "Physical qubits per logical qubit");
    ov->add_option("--d", overhead_opts.d, "Surface distances")->delimiter(',');
    ov->add_option("--levels", overhead_opts.levels, "Highest Hamming level (rows for 0..levels)");
    add_common(ov, overhead_opts.c, false);

    auto *lg = app.add_subcommand("logicals", "Logical operator matrices of the [[2^r-1, 2^r-2r-1, 3]] codes");
    lg->add_option("--r", logicals.r, "Check counts r")->delimiter(',');
    lg->add_option("--source", logicals.source, "reference, extracted or both")
        ->check(CLI::IsMember({"reference", "extracted", "both"}));
    add_common(lg, logicals.c, false);

    auto *sr = app.add_subcommand("surface-rate", "Single-block surface code logical rates P_sur(d, p)");
    sr->add_option("--d", surface_rate.d, "Distances")->delimiter(',');
    sr->add_option("--p", surface_rate.p, "p grid: value, list a,b,c or log range a:b");
    sr->add_option("--points", surface_rate.points, "Points in a log range");
    sr->add_option("--trials", surface_rate.trials, "Trials per point");
    sr->add_flag("--allow-even", surface_rate.allow_even, "Allow even distances");
    add_common(sr, surface_rate.c);

    auto *b = app.add_subcommand("bench", "Decode-time benchmark");
    b->add_option("--pairs", bench.pairs, "level:d pairs, comma separated");
    b->add_option("--p", bench.p, "Physical bit-flip probability");
    b->add_option("--trials", bench.trials, "Timed decodes per decoder and mode");
    b->add_option("--warmup", bench.warmup, "Untimed decodes before timing");
    add_common(b, bench.c);

    auto *pl = app.add_subcommand("plot", "Log-log SVG line chart from a CSV");
    pl->add_option("--in", plot.in, "Input CSV")->required();
    pl->add_option("--x", plot.plot.x, "x column");
    pl->add_option("--y", plot.plot.y, "y column");
    pl->add_option("--group", plot.group, "Comma-separated grouping columns");
    pl->add_option("--title", plot.plot.title, "Chart title");
    add_common(pl, plot.c, false);
    pl->get_option("--out")->required();

    auto *rp = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
    rp->add_option("--manifest", replay_manifest, "Manifest JSON")->required();
    rp->add_option("--out", replay_out, "Write to this path instead of the recorded one");

    if (!args.empty() && !args.front().empty() && args.front().front() != '-' &&
        app.get_subcommand_no_throw(args.front()) == nullptr) {
        err << "unknown subcommand '" << args.front() << "'\n" << app.help();
        return static_cast<int>(CLI::ExitCodes::ExtrasError);
    }
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err);
    }

    CLI::App *sub = app.get_subcommands().front();
    Context ctx{out, err, {}};
    RunManifest manifest;
    manifest.version = HAMSURF_VERSION;
    manifest.subcommand = sub->get_name();
    manifest.args = args;
    manifest.params = collect_params(sub);
    manifest.started = utc_timestamp();
    std::string primary_out;
    try {
        if (sub == rp) {
            RunManifest recorded = read_manifest(replay_manifest);
            if (recorded.tool != "hamsurf") {
                throw ParseError("--manifest: not a hamsurf manifest");
            }
            std::vector<std::string> again = recorded.args;
            if (!replay_out.empty()) {
                bool replaced = false;
                for (size_t i = 0; i < again.size(); i++) {
                    if (again[i] == "--out" && i + 1 < again.size()) {
                        again[i + 1] = replay_out;
                        replaced = true;
                    } else if (again[i].rfind("--out=", 0) == 0) {
                        again[i] = "--out=" + replay_out;
                        replaced = true;
                    }
                }
                if (!replaced) {
                    again.push_back("--out");
                    again.push_back(replay_out);
                }
            }
            return run_cli(again, out, err);
        }
        if (sub == s) {
            run_sweep(sweep, ctx);
            primary_out = sweep.c.out;
            manifest.seed = sweep.c.seed;
        } else if (sub == t) {
            run_threshold(threshold, ctx);
            primary_out = threshold.c.out;
        } else if (sub == c) {
            run_correlations(correlations, ctx);
            primary_out = correlations.s.c.out;
            manifest.seed = correlations.s.c.seed;
        } else if (sub == dcy) {
            run_decay(decay, ctx);
            primary_out = decay.c.out;
            manifest.seed = decay.c.seed;
        } else if (sub == pq) {
            run_perqubit(perqubit, ctx);
            primary_out = perqubit.c.out;
            manifest.seed = perqubit.c.seed;
        } else if (sub == ov) {
            run_overhead(overhead_opts, ctx);
            primary_out = overhead_opts.c.out;
        } else if (sub == lg) {
            run_logicals(logicals, ctx);
            primary_out = logicals.c.out;
        } else if (sub == sr) {
            run_surface_rate(surface_rate, ctx);
            primary_out = surface_rate.c.out;
            manifest.seed = surface_rate.c.seed;
        } else if (sub == b) {
            run_bench(bench, ctx);
            primary_out = bench.c.out;
            manifest.seed = bench.c.seed;
        } else if (sub == pl) {
            run_plot(plot, ctx);
            primary_out = plot.c.out;
        }
        if (!primary_out.empty()) {
            manifest.outputs = ctx.outputs;
            manifest.finished = utc_timestamp();
            write_manifest(manifest, manifest_path_for(primary_out));
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace hamsurf::cli
