// wbslope - wideband-slope analysis of K-user Gaussian interference channels
// Copyright (C) 2026 the wbslope authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Release gate: every published accuracy and behavior claim of the
// library, checked end to end at its stated tolerance. One line per
// check; the binary exits nonzero if any check fails. Wall-clock budgets
// are part of the checks they belong to.
//
// The checks are intentionally independent of the unit suite: closed
// forms are compared against grid searches, finite differences and
// hand-derived values, not against other library calls of the same
// formula.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wbslope/montecarlo.hpp"
#include "wbslope/outer_bound.hpp"
#include "wbslope/rng.hpp"
#include "wbslope/slope_metrics.hpp"

namespace {

using namespace wbslope;
using Clock = std::chrono::steady_clock;

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---- shared Monte Carlo experiment ----------------------------------------
// One run serves the TDMA-constancy check and the distribution checks, so
// its wall time is paid once; it is reported under check 10 where the
// budget lives.

ExperimentConfig base_config() {
    ExperimentConfig cfg;
    cfg.k = 10;
    cfg.a_values = {0.1, 0.5, 0.9};
    cfg.samples = 1000;
    cfg.seed = 0;
    cfg.restarts = 32;
    return cfg;
}

std::vector<SampleRecord> g_base_records;
double g_base_seconds = 0.0;

// ---- checks ---------------------------------------------------------------

Outcome check_symmetric_bound() {
    const auto start = Clock::now();
    double max_err = 0.0;
    for (int k : {2, 3, 10})
        for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            const OuterBoundResult res = slope_outer_bound(make_symmetric(k, alpha));
            if (!res.converged)
                return {false, fmt("optimizer did not converge at k=%d alpha=%g", k, alpha)};
            max_err = std::max(max_err,
                               std::fabs(res.slope - symmetric_outer_bound(k, alpha)));
        }
    const double secs = seconds_since(start);
    return {max_err <= 1e-6 && secs <= 60.0,
            fmt("max |numeric - closed form| = %.3g over 15 channels, %.2fs", max_err, secs)};
}

Outcome check_flat_profile_optimum() {
    double max_dev = 0.0;
    for (int k : {2, 3, 10})
        for (double alpha : {0.1, 0.5, 0.9}) {
            const DenominatorMinimum min = minimize_denominator(make_symmetric(k, alpha));
            for (const Sym2& v : min.profile) {
                max_dev = std::max(max_dev, std::fabs(v.a11 - 0.5));
                max_dev = std::max(max_dev, std::fabs(v.a12));
            }
        }
    return {max_dev <= 1e-6,
            fmt("max deviation of any optimal covariance from I/2 = %.3g", max_dev)};
}

Outcome check_eigenvalue_pattern() {
    double max_err = 0.0;
    for (double alpha : {0.25, 0.5, 0.75})
        for (int j : {2, 3, 10}) {
            const Channel ch = make_symmetric(j, alpha);
            const CovProfile zeros(j, Sym2{});
            const std::vector<double> evs =
                eigenvalues_symmetric(side_info_covariance(ch, zeros, j));
            // 2(j-1) copies of 1 - alpha, then two of 1 + (j-1) alpha
            for (int r = 0; r < 2 * (j - 1); ++r)
                max_err = std::max(max_err, std::fabs(evs[r] - (1.0 - alpha)));
            for (int r = 2 * (j - 1); r < 2 * j; ++r)
                max_err = std::max(max_err,
                                   std::fabs(evs[r] - (1.0 + (j - 1) * alpha)));
        }
    return {max_err <= 1e-10, fmt("max eigenvalue error = %.3g over the 9 cases", max_err)};
}

Outcome check_tdma_constancy() {
    int exact = 0;
    for (const SampleRecord& r : g_base_records)
        if (r.s0_tdma == 2.0) ++exact;
    const int total = static_cast<int>(g_base_records.size());
    return {exact == total,
            fmt("s0_tdma == 2 bit-for-bit in %d of %d records", exact, total)};
}

Outcome check_curve_extraction() {
    double worst_slope = 0.0, worst_ebno = 0.0;
    SplitMix64 rng(2025);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = 2 + static_cast<int>(rng.next() % 5);
        const double a = 0.05 + 0.9 * rng.next_double();
        const Channel ch = sample_random(k, a, rng.next());
        PhaseVector theta(k);
        for (double& t : theta) t = rng.next_angle();

        const struct {
            RateCurve curve;
            double want;
        } cases[] = {
            {tin_curve(ch), slope_tin(ch)},
            {tdma_curve(ch), slope_tdma(ch)},
            {one_dim_curve(ch, theta), slope_one_dim(ch, theta)},
        };
        const double ebno_want = ebno_min_equal_power(ch);
        for (const auto& c : cases) {
            const SlopeEstimate est = slope_from_rate_curve(c.curve);
            worst_slope = std::max(worst_slope, std::fabs(est.s0 - c.want) / c.want);
            worst_ebno =
                std::max(worst_ebno, std::fabs(est.ebno_min - ebno_want) / ebno_want);
        }
    }
    return {worst_slope <= 1e-3 && worst_ebno <= 1e-4,
            fmt("100 channels x 3 curves: slope rel err <= %.3g, Eb/N0 rel err <= %.3g",
                worst_slope, worst_ebno)};
}

Outcome check_alignment_oracle() {
    const auto start = Clock::now();
    double worst = 0.0;

    // K = 2: exhaustive scan of the single free direction
    SplitMix64 rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        const Channel ch = sample_random(2, 0.1 + 0.85 * rng.next_double(), rng.next());
        const double w01 = ch.direct_gain(0) * ch.gain(0, 1);
        const double w10 = ch.direct_gain(1) * ch.gain(1, 0);
        const double p01 = ch.phase_at(0, 1), p10 = ch.phase_at(1, 0);
        double grid_best = 1e300;
        for (int i = 0; i < 1000000; ++i) {
            const double t = -kPi + 2.0 * kPi * i / 1000000.0;
            const double f = w01 * std::cos(2.0 * (p01 + t)) +
                             w10 * std::cos(2.0 * (p10 - t));
            if (f < grid_best) grid_best = f;
        }
        const AlignmentResult res = optimize_phases(ch);
        worst = std::max(worst, std::fabs(res.cost_star - grid_best));
    }

    // K = 3: 720 x 720 scan plus descent refinement of the grid winner
    for (int trial = 0; trial < 5; ++trial) {
        const Channel ch = sample_random(3, 0.1 + 0.85 * rng.next_double(), rng.next());
        double grid_best = 1e300;
        PhaseVector grid_theta(3, 0.0);
        for (int i = 0; i < 720; ++i)
            for (int m = 0; m < 720; ++m) {
                PhaseVector theta{0.0, -kPi + 2.0 * kPi * i / 720.0,
                                  -kPi + 2.0 * kPi * m / 720.0};
                const double f = phase_cost(ch, theta);
                if (f < grid_best) {
                    grid_best = f;
                    grid_theta = theta;
                }
            }
        // plain descent inside the basin the grid located
        PhaseVector theta = grid_theta;
        double f = grid_best;
        double step = 1e-2;
        for (int it = 0; it < 400; ++it) {
            const PhaseVector grad = phase_cost_gradient(ch, theta);
            PhaseVector trial_theta = theta;
            for (int j = 1; j < 3; ++j) trial_theta[j] -= step * grad[j];
            const double ft = phase_cost(ch, trial_theta);
            if (ft < f) {
                theta = trial_theta;
                f = ft;
                step *= 1.6;
            } else {
                step *= 0.5;
            }
        }
        const AlignmentResult res = optimize_phases(ch);
        worst = std::max(worst, std::fabs(res.cost_star - f));
    }

    const double secs = seconds_since(start);
    return {worst <= 1e-3 && secs <= 300.0,
            fmt("max |optimizer - grid oracle| = %.3g over 25 channels, %.2fs", worst, secs)};
}

Outcome check_gradient() {
    double worst = 0.0;
    SplitMix64 rng(808);
    const double h = 1e-6;
    for (int trial = 0; trial < 100; ++trial) {
        const int k = 2 + static_cast<int>(rng.next() % 6);
        const Channel ch = sample_random(k, 0.1 + 0.85 * rng.next_double(), rng.next());
        PhaseVector theta(k);
        for (double& t : theta) t = rng.next_angle();
        const PhaseVector grad = phase_cost_gradient(ch, theta);
        for (int j = 0; j < k; ++j) {
            PhaseVector up = theta, dn = theta;
            up[j] += h;
            dn[j] -= h;
            const double fd = (phase_cost(ch, up) - phase_cost(ch, dn)) / (2.0 * h);
            worst = std::max(worst, std::fabs(grad[j] - fd));
        }
    }
    return {worst <= 1e-6, fmt("max |analytic - central difference| = %.3g", worst)};
}

Outcome check_sandwich() {
    ExperimentConfig cfg;
    cfg.k = 10;
    cfg.a_values = {0.9};
    cfg.samples = 500;
    cfg.seed = 777;
    cfg.restarts = 32;
    cfg.include_bound = true;
    const auto records = run_experiment(cfg);

    int membership = 0, ordered = 0;
    for (const SampleRecord& r : records) {
        if (r.membership.value_or(false)) ++membership;
        if (r.s0_inta <= r.s0_bound.value() + 1e-6) ++ordered;
    }
    // the membership filter is nearly empty at this cross gain (random
    // phases defeat the genie construction), so the claim is also
    // asserted unconditionally, which is strictly stronger
    const bool pass = ordered == 500;
    return {pass, fmt("s0_inta <= s0_bound + 1e-6 in %d of 500 records "
                      "(membership passed in %d; claim checked unconditionally)",
                      ordered, membership)};
}

Outcome check_near_one_bound() {
    SplitMix64 rng(920);
    double worst = 0.0;
    int member = 0;
    const int total = 25;
    for (int trial = 0; trial < total; ++trial) {
        const double a = 0.95 + 0.04 * rng.next_double();
        std::vector<double> phase(100, 0.0);
        for (int j = 0; j < 10; ++j)
            for (int i = 0; i < 10; ++i)
                if (i != j)
                    phase[static_cast<std::size_t>(j) * 10 + i] =
                        0.01 * (2.0 * rng.next_double() - 1.0);
        const OuterBoundResult res = slope_outer_bound(make_symmetric(10, a, phase));
        if (!res.membership) continue;
        ++member;
        worst = std::max(worst, res.slope);
    }
    // The claim is conditional on membership: channels outside the tested
    // region carry no bound obligation. Require a nonempty passing set so
    // the check cannot succeed vacuously.
    return {member > 0 && worst <= 2.15,
            fmt("%d of %d channels pass membership; largest bound among them = %.6f <= 2.15",
                member, total, worst)};
}

Outcome check_distributions() {
    // (i) needs a far larger sample than (ii): the beat-TDMA event at
    // cross gain 0.9 is real but rare (restart-insensitive rate around
    // 3e-5, measured over 100k realizations; 256 restarts reproduce the
    // 32-restart minima to 1e-13, so this is the ensemble, not the
    // optimizer), and 1000 draws cannot witness it reliably. The tail
    // run extends the same deterministic stream until the event count is
    // meaningful.
    const auto start = Clock::now();

    std::vector<double> at01, at09;
    int beat_tdma_base = 0;
    for (const SampleRecord& r : g_base_records) {
        if (r.a == 0.1) at01.push_back(r.s0_inta);
        if (r.a == 0.9) {
            at09.push_back(r.s0_inta);
            if (r.s0_inta > 2.0) ++beat_tdma_base;
        }
    }

    ExperimentConfig tail;
    tail.k = 10;
    tail.a_values = {0.9};
    tail.samples = 100000;
    tail.seed = 0;
    tail.restarts = 32;
    const auto tail_records = run_experiment(tail);
    int beat_tdma_tail = 0;
    for (const SampleRecord& r : tail_records)
        if (r.s0_inta > 2.0) ++beat_tdma_tail;

    const double med01 = lower_median(at01);
    const double med09 = lower_median(at09);
    const double tin_low = slope_tin(make_symmetric(10, 0.1));
    const double tin_high = slope_tin(make_symmetric(10, 1.0));

    const double secs = g_base_seconds + seconds_since(start);
    const bool pass = beat_tdma_tail > 0 && med01 > med09 && tin_high < 2.0 &&
                      tin_low > 2.0 && secs <= 600.0;
    return {pass,
            fmt("beat-TDMA at a=0.9: %d/1000 base, %d/100000 extended; median "
                "s0_inta %.3f (a=0.1) > %.3f (a=0.9); s0_tin %.3f (a=1) < 2 < %.3f "
                "(a=0.1); %.0fs",
                beat_tdma_base, beat_tdma_tail, med01, med09, tin_high, tin_low, secs)};
}

Outcome check_cli_determinism() {
    const char* cli = std::getenv("WBSLOPE_CLI");
    if (!cli || !*cli) return {false, "WBSLOPE_CLI is not set; run through ctest"};

    const auto dir = std::filesystem::temp_directory_path();
    const std::string base = std::string(cli) +
                             " montecarlo k=5 a=0.3,0.6 samples=12 seed=3 restarts=8";
    std::vector<std::string> outputs;
    for (const auto& [tag, jobs] : {std::pair<const char*, int>{"j1", 1},
                                    {"j1b", 1},
                                    {"j4", 4}}) {
        const auto out = dir / (std::string("wbslope_gate_") + tag + ".csv");
        const std::string cmd = base + " --jobs " + std::to_string(jobs) + " --out " +
                                out.string() + " >/dev/null 2>&1";
        if (std::system(cmd.c_str()) != 0) return {false, "CLI run failed: " + cmd};
        std::ifstream in(out);
        std::ostringstream text;
        text << in.rdbuf();
        outputs.push_back(text.str());
        std::filesystem::remove(out);
        std::filesystem::remove(out.string() + ".meta");
    }
    const bool same = outputs[0] == outputs[1] && outputs[0] == outputs[2] &&
                      !outputs[0].empty();
    return {same, same ? "byte-identical CSV across repeats and --jobs 1/4"
                       : "CSV bytes differ between runs"};
}

}  // namespace

int main() {
    struct Check {
        const char* label;
        std::function<Outcome()> run;
    };
    const Check checks[] = {
        {"symmetric outer bound matches the closed form", check_symmetric_bound},
        {"flat covariance profile is the symmetric optimum", check_flat_profile_optimum},
        {"zero-power side-information spectra", check_eigenvalue_pattern},
        {"TDMA slope is exactly 2 on every realization", check_tdma_constancy},
        {"rate-curve extraction agrees with closed forms", check_curve_extraction},
        {"alignment optimizer attains the grid optimum", check_alignment_oracle},
        {"phase-cost gradient matches finite differences", check_gradient},
        {"achieved slope never exceeds the outer bound", check_sandwich},
        {"near-one cross gains pin the bound below 2.15", check_near_one_bound},
        {"slope distributions behave across cross gains", check_distributions},
        {"montecarlo CLI output is scheduling-independent", check_cli_determinism},
    };

    std::printf("wbslope acceptance gate\n");
    {
        const auto start = Clock::now();
        g_base_records = run_experiment(base_config());
        g_base_seconds = seconds_since(start);
        std::printf("shared experiment: k=10, a in {0.1, 0.5, 0.9}, 1000 samples each "
                    "(%.0fs)\n\n",
                    g_base_seconds);
    }

    int failures = 0;
    int id = 0;
    for (const Check& c : checks) {
        ++id;
        const auto start = Clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = seconds_since(start);
        std::printf("[%2d] %s  %-52s (%7.2fs)  %s\n", id, out.pass ? "PASS" : "FAIL",
                    c.label, secs, out.detail.c_str());
        std::fflush(stdout);
        if (!out.pass) ++failures;
    }

    std::printf("\n%d of %d checks passed\n", id - failures, id);
    return failures == 0 ? 0 : 1;
}
