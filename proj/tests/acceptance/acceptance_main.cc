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


// Runs the acceptance criteria and prints one PASS/FAIL/WARN line per
// criterion. Exit status is nonzero when any hard criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "hamsurf/cli/bench.h"
#include "hamsurf/cli/cli.h"
#include "hamsurf/codes.h"
#include "hamsurf/concat.h"
#include "hamsurf/decode.h"
#include "hamsurf/gf2.h"
#include "hamsurf/logical.h"
#include "hamsurf/reference_logicals.h"
#include "hamsurf/sim.h"
#include "hamsurf/stats.h"
#include "hamsurf/surface_decoder.h"
#include "oracles.h"

namespace hamsurf::acceptance {

namespace {

enum class Status { pass, fail, warn };

struct Outcome {
    Status status = Status::fail;
    std::string detail;
};

struct Config {
    size_t workers = 0;
    std::ostream *log = &std::cout;
};

std::string g(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

Outcome verdict(bool ok, std::string detail) {
    return {ok ? Status::pass : Status::fail, std::move(detail)};
}

std::vector<CurvePoint> hamming_curve(int level, const std::vector<double> &grid, uint64_t trials, uint64_t seed,
                                      const Config &cfg) {
    std::vector<CurvePoint> curve;
    for (double p : grid) {
        auto r = run_hamming_campaign(level, p, trials, seed, BaseCode::steane(), cfg.workers);
        curve.push_back({p, r.rate});
    }
    return curve;
}

void print_curves(const Config &cfg, const std::string &name, const std::map<int, std::vector<CurvePoint>> &curves) {
    auto &log = *cfg.log;
    log << "    " << name << " p:";
    for (const auto &pt : curves.begin()->second) {
        log << ' ' << g(pt.p);
    }
    log << '\n';
    for (const auto &[level, curve] : curves) {
        log << "    level " << level << ":";
        for (const auto &pt : curve) {
            log << ' ' << g(pt.rate.p_hat);
        }
        log << '\n';
    }
}

std::string crossing_text(const Crossing &x) {
    if (!x.found) {
        return "no crossing";
    }
    return g(x.p) + " [" + g(x.p_low) + ", " + g(x.p_high) + "] at rate " + g(x.rate);
}

// 1. Overhead table, through the CLI.
Outcome overhead_table(const Config &) {
    std::ostringstream out, err;
    int status = cli::run_cli({"overhead", "--d", "3,4,5", "--levels", "3"}, out, err);
    if (status != 0) {
        return verdict(false, "overhead exited " + std::to_string(status) + ": " + err.str());
    }
    const std::map<std::pair<int, int>, long> expected = {
        {{3, 0}, 13}, {{3, 1}, 28}, {{3, 2}, 41}, {{3, 3}, 51}, {{4, 0}, 25}, {{4, 1}, 54},
        {{4, 2}, 79}, {{4, 3}, 98}, {{5, 0}, 41}, {{5, 1}, 88}, {{5, 2}, 130}, {{5, 3}, 160}};
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    size_t rows = 0, matched = 0;
    while (std::getline(in, line)) {
        rows++;
        int d = 0, level = 0;
        double exact = 0;
        long rounded = 0;
        if (std::sscanf(line.c_str(), "%d,%d,%lf,%ld", &d, &level, &exact, &rounded) == 4) {
            auto it = expected.find({d, level});
            matched += it != expected.end() && it->second == rounded && std::lround(exact) == rounded;
        }
    }
    return verdict(rows == 12 && matched == 12,
                   std::to_string(rows) + " rows, " + std::to_string(matched) + "/12 match the table");
}

// 2. Tabulated logical operators.
Outcome logical_validation(const Config &) {
    std::string detail;
    bool ok = true;
    for (int r : {3, 4, 5}) {
        BitMatrix h = hamming_check_matrix(r);
        BitMatrix ref = reference_logicals(r);
        BitMatrix ext = extract_logicals(GeneratorSet::from_css_codewords(kernel_basis(h))).z_logicals;
        bool valid = validate_logicals(h, ref);
        bool equivalent = coset_equivalent(h, ref, ext);
        ok = ok && valid && equivalent;
        detail += "r=" + std::to_string(r) + " valid=" + (valid ? "yes" : "no") +
                  " coset-equivalent=" + (equivalent ? "yes" : "no") + "; ";
    }
    return verdict(ok, detail);
}

// 3. Hamming threshold.
Outcome hamming_threshold(const Config &cfg) {
    auto grid = cli::parse_p_grid("0.01:0.04", 16);
    std::map<int, std::vector<CurvePoint>> curves;
    for (int level : {1, 2, 3}) {
        curves[level] = hamming_curve(level, grid, 100000, 3, cfg);
    }
    print_curves(cfg, "hamming, 1e5 trials/point", curves);
    Crossing x12 = threshold_crossing(curves[1], curves[2]);
    Crossing x23 = threshold_crossing(curves[2], curves[3]);
    bool first = x12.found && std::abs(x12.p - 0.021) <= 0.003;
    bool second = false;
    if (x12.found && x23.found) {
        double h12 = (x12.p_high - x12.p_low) / 2;
        double h23 = (x23.p_high - x23.p_low) / 2;
        second = std::abs(x12.p - x23.p) <= std::hypot(h12, h23);
    }
    return verdict(first && second, "levels 1/2: " + crossing_text(x12) + " (want 0.021 +- 0.003); levels 2/3: " +
                                        crossing_text(x23) + " (want consistent with 1/2)");
}

// 4. Surface-Hamming thresholds.
Outcome surface_hamming_thresholds(const Config &cfg) {
    struct Target {
        int d;
        double p_th;
        double tol;
        std::string grid;
    };
    std::string detail;
    bool ok = true;
    for (const auto &t : {Target{3, 0.013, 0.003, "0.005:0.04"}, Target{5, 0.034, 0.005, "0.01:0.06"}}) {
        auto grid = cli::parse_p_grid(t.grid, 16);
        SurfaceRateTable table;
        for (double p : grid) {
            table.insert(t.d, p, estimate_surface_rate(t.d, p, 1000000, 41, cfg.workers));
        }
        std::map<int, std::vector<CurvePoint>> curves;
        for (int level : {1, 2}) {
            for (double p : grid) {
                auto r = run_surface_hamming_campaign(t.d, level, p, 100000, 4, table, cfg.workers);
                curves[level].push_back({p, r.rate});
            }
        }
        print_curves(cfg, "surface-hamming d=" + std::to_string(t.d) + ", 1e5 trials/point", curves);
        Crossing x = threshold_crossing(curves[1], curves[2]);
        bool p_ok = x.found && std::abs(x.p - t.p_th) <= t.tol;
        bool rate_ok = x.found && x.rate >= 1e-3 / 3 && x.rate <= 3e-3;
        ok = ok && p_ok && rate_ok;
        detail += "d=" + std::to_string(t.d) + ": " + crossing_text(x) + " (want " + g(t.p_th) + " +- " + g(t.tol) +
                  ", rate within 3x of 1e-3); ";
    }
    return verdict(ok, detail);
}

// 5. Surface-Hamming vs surface-code memory at p = 0.01.
Outcome surface_memory_comparison(const Config &cfg) {
    const double p = 0.01;
    SurfaceRateTable table;
    table.insert(3, p, estimate_surface_rate(3, p, 1000000, 51, cfg.workers));
    auto sh = run_surface_hamming_campaign(3, 1, p, 100000, 5, table, cfg.workers);
    auto p4 = estimate_surface_rate(4, p, 1000000, 52, cfg.workers, true);
    double memory = memory_failure_from_single(p4.p_hat, 7);
    double ratio = sh.rate.p_hat > 0 ? memory / sh.rate.p_hat : INFINITY;
    return verdict(ratio >= 5, "surface-hamming d=3 l=1: " + g(sh.rate.p_hat) + " [" + g(sh.rate.ci_low) + ", " +
                                   g(sh.rate.ci_high) + "]; P_sur(4)=" + g(p4.p_hat) + ", 7-qubit memory " +
                                   g(memory) + "; ratio " + g(ratio) + " (want >= 5)");
}

TrialStats block_stats(const Config &cfg) {
    return run_hamming_campaign(1, 0.08, 20000, 6, BaseCode::bare(), cfg.workers, LogicalBasis::reference).stats;
}

// 6. Pairwise correlations on [[15,7,3]].
Outcome correlations(const Config &cfg) {
    auto report = pearson_pairs(block_stats(cfg));
    size_t positive = 0;
    double sum = 0, lo = INFINITY, hi = -INFINITY;
    for (const auto &c : report.pairs) {
        positive += c.defined && c.rho_ci_low > 0;
        sum += c.rho;
        lo = std::min(lo, c.rho);
        hi = std::max(hi, c.rho);
    }
    double mean = sum / static_cast<double>(report.pairs.size());
    return verdict(report.pairs.size() == 21 && positive == 21 && mean >= 0.3 && mean <= 0.5,
                   std::to_string(positive) + "/" + std::to_string(report.pairs.size()) +
                       " pairs positive at 95%; rho in [" + g(lo) + ", " + g(hi) + "], mean " + g(mean) +
                       " (want [0.3, 0.5])");
}

// 7. Per-qubit rates.
Outcome per_qubit(const Config &cfg) {
    auto rates = per_qubit_rates(block_stats(cfg));
    double lo = INFINITY, hi = 0;
    for (const auto &r : rates) {
        lo = std::min(lo, r.p_hat);
        hi = std::max(hi, r.p_hat);
    }
    double ratio = lo > 0 ? hi / lo : INFINITY;
    return verdict(ratio < 1.25, "rates in [" + g(lo) + ", " + g(hi) + "], max/min " + g(ratio) + " (want < 1.25)");
}

// 8. Locally decaying errors.
Outcome decay(const Config &cfg) {
    auto report = decay_check(block_stats(cfg));
    std::string ps;
    for (size_t i = 1; i < report.p.size(); i++) {
        ps += (i > 1 ? " " : "") + g(report.p[i]);
    }
    return verdict(report.rate <= 0.36 && report.within_bound,
                   "p_i = " + ps + "; fitted rate " + g(report.rate) + " (want <= 0.36), marginal reading " +
                       g(report.rate_marginal) + "; within bound " + (report.within_bound ? "yes" : "no"));
}

// 9. Oracle equivalence.
Outcome oracle_equivalence(const Config &cfg) {
    std::string detail;
    bool ok = true;

    // (a) d = 3 against the exhaustive minimum-weight oracle.
    {
        auto lat = build_surface(3);
        auto oracle = testing::build_surface_oracle(lat);
        SurfaceDecoder decoder(lat);
        size_t weight_mismatch = 0, outcome_mismatch = 0, ties = 0, strict = 0, failures = 0;
        for (uint32_t e = 0; e < (1u << lat.n_data); e++) {
            BitVector error(lat.n_data);
            for (size_t q = 0; q < lat.n_data; q++) {
                error.set(q, (e >> q) & 1);
            }
            auto out = decoder.decode(DefectSet::from_error(lat, error));
            const auto &mw = oracle.min_weight[oracle.syndrome_of(e)];
            weight_mismatch += out.correction.popcount() != std::min(mw[0], mw[1]);
            bool fail = surface_logical_failure(lat, error, out.correction);
            failures += fail;
            if (mw[0] == mw[1]) {
                ties++;
                continue;
            }
            bool oracle_fail = (mw[1] < mw[0]) != oracle.logical_class(e);
            strict += oracle_fail;
            outcome_mismatch += fail != oracle_fail;
        }
        bool a = weight_mismatch == 0 && outcome_mismatch == 0 && failures >= strict && failures <= strict + ties;
        ok = ok && a;
        detail += "(a) 8192 errors: " + std::to_string(weight_mismatch) + " weight / " +
                  std::to_string(outcome_mismatch) + " outcome mismatches, " + std::to_string(ties) +
                  " errors with tied minimum-weight classes; ";
    }

    // (b) Every weight-1 physical error is corrected, for every schema up to level 2.
    {
        size_t checked = 0, uncorrected = 0;
        std::vector<uint32_t> out;
        std::vector<std::pair<int, BaseCode>> schemas = {{0, BaseCode::steane()}, {1, BaseCode::steane()},
                                                         {2, BaseCode::steane()}, {1, BaseCode::bare()},
                                                         {2, BaseCode::bare()}};
        for (int d : {3, 5}) {
            schemas.push_back({1, BaseCode::surface(d)});
            schemas.push_back({2, BaseCode::surface(d)});
        }
        for (const auto &[level, base] : schemas) {
            FrameDecoder decoder(build_schema(level, base));
            auto ws = decoder.make_workspace();
            const auto &schema = decoder.schema();
            if (base.kind == BaseKind::surface) {
                // A surface register passes a logical flip upward only when its
                // block fails; a single flip in each register must not.
                SurfaceDecoder surface(build_surface(base.distance));
                for (uint32_t q = 0; q < surface.lattice().n_data; q++) {
                    checked++;
                    uncorrected += surface.fails_sparse({q});
                }
            }
            for (uint32_t x = 0; x < schema.base_registers; x++) {
                checked++;
                uint32_t flip[] = {x};
                decoder.decode_sparse(flip, ws, out);
                uncorrected += !out.empty();
                if (schema.base_registers <= 3255) {
                    BitVector frame(schema.base_registers);
                    frame.set(x, true);
                    uncorrected += decode_concatenated(frame, schema).popcount() != 0;
                }
            }
        }
        ok = ok && uncorrected == 0;
        detail += "(b) " + std::to_string(checked) + " single errors over " + std::to_string(schemas.size()) +
                  " schemas, " + std::to_string(uncorrected) + " uncorrected; ";
    }

    // (c) Level-1 rate at p = 0.02 against enumeration.
    {
        const double p = 0.02;
        const uint64_t trials = 100000;
        double exact = testing::level1_exact_failure(p);
        double truncated = testing::level1_truncated_failure(p, 4);
        auto r = run_hamming_campaign(1, p, trials, 9, BaseCode::steane(), cfg.workers);
        double sigma = std::sqrt(exact * (1 - exact) / static_cast<double>(trials));
        bool c = std::abs(r.rate.p_hat - exact) <= 2 * sigma && r.rate.p_hat + 2 * sigma >= truncated;
        ok = ok && c;
        detail += "(c) sampled " + g(r.rate.p_hat) + ", enumeration " + g(exact) + " (2 sigma " + g(2 * sigma) +
                  "), weight<=4 truncation " + g(truncated) + " (lower bound)";
    }
    return verdict(ok, detail);
}

// 10. Determinism and manifest round trip.
Outcome determinism(const Config &) {
    namespace fs = std::filesystem;
    std::string detail;
    bool ok = true;
    const std::vector<std::vector<std::string>> commands = {
        {"sweep", "--code", "hamming", "--levels", "1,2", "--p", "0.01:0.03", "--points", "3", "--trials", "20000",
         "--seed", "10"},
        {"sweep", "--code", "surface-hamming", "--d", "3", "--levels", "1,2", "--p", "0.01,0.02", "--trials", "5000",
         "--seed", "11"},
        {"correlations", "--trials", "5000", "--seed", "12", "--max-set", "3"},
        {"surface-rate", "--d", "3,5", "--p", "0.02,0.05", "--trials", "5000", "--seed", "13"},
    };
    for (const auto &base : commands) {
        std::string reference;
        bool same = true;
        for (const char *workers : {"1", "2", "5"}) {
            auto args = base;
            args.insert(args.end(), {"--workers", workers});
            std::ostringstream out, err;
            if (cli::run_cli(args, out, err) != 0) {
                return verdict(false, base[0] + " failed: " + err.str());
            }
            if (reference.empty()) {
                reference = out.str();
            } else {
                same = same && out.str() == reference;
            }
        }
        ok = ok && same;
        detail += base[0] + (same ? " identical" : " DIFFERS") + " over workers 1/2/5; ";
    }

    fs::path dir = fs::temp_directory_path() / ("hamsurf_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    auto read = [](const fs::path &p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    };
    auto args = commands[1];
    args.insert(args.end(), {"--out", (dir / "run.csv").string()});
    std::ostringstream out, err;
    bool round_trip = cli::run_cli(args, out, err) == 0 && fs::exists(dir / "run.csv.manifest.json") &&
                      cli::run_cli({"replay", "--manifest", (dir / "run.csv.manifest.json").string(), "--out",
                                    (dir / "again.csv").string()},
                                   out, err) == 0 &&
                      !read(dir / "run.csv").empty() && read(dir / "run.csv") == read(dir / "again.csv");
    fs::remove_all(dir);
    ok = ok && round_trip;
    detail += std::string("manifest replay ") + (round_trip ? "identical" : "DIFFERS");
    return verdict(ok, detail);
}

// 11. Decode timing (report only).
Outcome benchmark(const Config &cfg) {
    cli::BenchConfig config;
    config.trials = 100000;
    config.workers = cfg.workers;
    auto records = cli::bench_decoders(config);
    std::map<std::string, double> seq;
    for (const auto &r : records) {
        *cfg.log << "    " << r.decoder << " " << r.mode << ": mean " << g(r.mean_ns) << " ns, sd " << g(r.stddev_ns)
                 << " ns, sampling " << g(r.sample_ns) << " ns\n";
        if (r.mode == "sequential") {
            seq[r.decoder] = r.mean_ns;
        }
    }
    std::string detail;
    bool faster = true;
    for (auto [level, d] : config.pairs) {
        double h = seq["hamming-" + std::to_string(level)];
        double s = seq["surface-" + std::to_string(d)];
        faster = faster && h < s;
        detail += "hamming-" + std::to_string(level) + " " + g(h) + " ns vs surface-" + std::to_string(d) + " " +
                  g(s) + " ns; ";
    }
    double t1 = seq["hamming-1"], t2 = seq["hamming-2"], t3 = seq["hamming-3"];
    bool superlinear = t3 - t2 > t2 - t1 && t2 - t1 > 0;
    detail += std::string("Hamming faster at every pairing: ") + (faster ? "yes" : "no") +
              "; super-linear growth in level: " + (superlinear ? "yes" : "no");
    return {faster && superlinear ? Status::pass : Status::warn, detail};
}

struct Criterion {
    int id;
    std::string title;
    std::function<Outcome(const Config &)> run;
};

}  // namespace

int run(int argc, char **argv) {
    CLI::App app{"hamsurf acceptance criteria"};
    std::vector<int> selected;
    Config cfg;
    cfg.workers = cli::default_workers();
    app.add_option("--criterion", selected, "Criteria to run (default: all)")->delimiter(',');
    app.add_option("--workers", cfg.workers, "Worker threads, 0 = all cores");
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria = {
        {1, "overhead table", overhead_table},
        {2, "logical operator validation", logical_validation},
        {3, "Hamming threshold", hamming_threshold},
        {4, "surface-Hamming thresholds", surface_hamming_thresholds},
        {5, "surface-Hamming vs surface memory at p=0.01", surface_memory_comparison},
        {6, "pairwise correlations at p=0.08", correlations},
        {7, "per-qubit rates at p=0.08", per_qubit},
        {8, "locally decaying errors at p=0.08", decay},
        {9, "oracle equivalence", oracle_equivalence},
        {10, "determinism and manifest replay", determinism},
        {11, "decode timing (warning only)", benchmark},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) {
            continue;
        }
        std::cout << "criterion " << c.id << ": " << c.title << '\n' << std::flush;
        Outcome o;
        try {
            o = c.run(cfg);
        } catch (const std::exception &e) {
            o = {Status::fail, std::string("exception: ") + e.what()};
        }
        const char *tag = o.status == Status::pass ? "PASS" : o.status == Status::fail ? "FAIL" : "WARN";
        failed += o.status == Status::fail;
        std::cout << tag << " criterion " << c.id << " (" << c.title << "): " << o.detail << '\n' << std::flush;
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace hamsurf::acceptance

int main(int argc, char **argv) {
    return hamsurf::acceptance::run(argc, argv);
}
