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

#include "wbslope/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "wbslope/outer_bound.hpp"
#include "wbslope/rng.hpp"
#include "wbslope/slope_metrics.hpp"
#include "wbslope/version.hpp"

namespace wbslope {

namespace {

void check_config(const ExperimentConfig& c) {
    if (c.k < 2) throw std::invalid_argument("run_experiment: k must be at least 2");
    if (c.a_values.empty()) throw std::invalid_argument("run_experiment: a_values must be nonempty");
    for (const double a : c.a_values)
        if (!std::isfinite(a) || a < 0.0)
            throw std::invalid_argument("run_experiment: a values must be finite and nonnegative");
    if (c.samples < 1) throw std::invalid_argument("run_experiment: samples must be at least 1");
    if (c.restarts < 1) throw std::invalid_argument("run_experiment: restarts must be at least 1");
}

SampleRecord make_record(const ExperimentConfig& c, int a_index, int sample_index) {
    SampleRecord rec;
    rec.a = c.a_values[static_cast<std::size_t>(a_index)];
    rec.sample_index = sample_index;

    const std::uint64_t ch_seed =
        mix_seed(c.seed, static_cast<std::uint64_t>(a_index),
                 static_cast<std::uint64_t>(sample_index));
    const Channel ch = sample_random(c.k, rec.a, ch_seed);

    rec.s0_tin = slope_tin(ch);
    rec.s0_tdma = slope_tdma(ch);

    AlignmentOptions ao;
    ao.restarts = c.restarts;
    ao.seed = mix_seed(ch_seed, 0x616c69676eULL, 1);
    const AlignmentResult ar = optimize_phases(ch, ao);
    rec.s0_inta = ar.slope;
    rec.theta_star = ar.theta_star;
    rec.converged = ar.converged;

    if (c.include_bound) {
        BoundOptions bo;
        bo.seed = mix_seed(ch_seed, 0x626f756e64ULL, 2);
        // hand the bound the record's own alignment profile so its
        // denominator can only land at or below the achievable one
        bo.align_warm_start = false;
        bo.warm_starts.push_back(rank_one_profile(ar.theta_star));
        const OuterBoundResult ob = slope_outer_bound(ch, bo);
        rec.s0_bound = ob.slope;
        rec.membership = ob.membership;
        rec.converged = rec.converged && ob.converged;
    }
    return rec;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_meta(const std::filesystem::path& dest, const ExperimentConfig& c) {
    const std::filesystem::path meta = dest.string() + ".meta";
    std::ofstream out(meta);
    if (!out) throw std::runtime_error("write_csv: cannot open " + meta.string());
    out << "tool=wbslope " << kVersion << "\n";
    out << "k=" << c.k << "\n";
    out << "a=";
    for (std::size_t i = 0; i < c.a_values.size(); ++i)
        out << (i ? "," : "") << fmt17(c.a_values[i]);
    out << "\n";
    out << "samples=" << c.samples << "\n";
    out << "seed=" << c.seed << "\n";
    out << "restarts=" << c.restarts << "\n";
    out << "include_bound=" << (c.include_bound ? 1 : 0) << "\n";
    if (!out) throw std::runtime_error("write_csv: write failed for " + meta.string());
}

template <typename Rows>
void write_csv_file(const Rows& rows, const std::filesystem::path& dest,
                    const ExperimentConfig& config) {
    std::ofstream out(dest);
    if (!out) throw std::runtime_error("write_csv: cannot open " + dest.string());
    write_csv(rows, out);
    if (!out) throw std::runtime_error("write_csv: write failed for " + dest.string());
    out.close();
    write_meta(dest, config);
}

}  // namespace

std::vector<SampleRecord> run_experiment(const ExperimentConfig& config, int jobs) {
    check_config(config);
    if (jobs < 1) throw std::invalid_argument("run_experiment: jobs must be at least 1");

    const int na = static_cast<int>(config.a_values.size());
    const int total = na * config.samples;
    std::vector<SampleRecord> records(static_cast<std::size_t>(total));

    auto fill = [&](int idx) {
        records[static_cast<std::size_t>(idx)] =
            make_record(config, idx / config.samples, idx % config.samples);
    };

    if (jobs == 1 || total == 1) {
        for (int idx = 0; idx < total; ++idx) fill(idx);
        return records;
    }

    std::atomic<int> next{0};
    auto worker = [&] {
        for (int idx = next.fetch_add(1); idx < total; idx = next.fetch_add(1)) fill(idx);
    };
    std::vector<std::thread> pool;
    const int nthreads = std::min(jobs, total);
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    return records;
}

std::vector<std::pair<double, double>> empirical_cdf(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("empirical_cdf: values must be nonempty");
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    std::vector<std::pair<double, double>> cdf;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (i + 1 == values.size() || values[i + 1] > values[i])
            cdf.emplace_back(values[i], static_cast<double>(i + 1) / n);
    return cdf;
}

double lower_median(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("lower_median: values must be nonempty");
    std::sort(values.begin(), values.end());
    return values[(values.size() - 1) / 2];
}

std::vector<SweepRow> median_sweep(const ExperimentConfig& config, int jobs) {
    const std::vector<SampleRecord> records = run_experiment(config, jobs);
    std::vector<SweepRow> rows;
    rows.reserve(config.a_values.size());
    for (std::size_t ai = 0; ai < config.a_values.size(); ++ai) {
        std::vector<double> inta;
        inta.reserve(static_cast<std::size_t>(config.samples));
        for (int s = 0; s < config.samples; ++s)
            inta.push_back(records[ai * config.samples + s].s0_inta);
        const Channel magnitudes = make_symmetric(config.k, config.a_values[ai]);
        rows.push_back({config.a_values[ai], lower_median(std::move(inta)),
                        slope_tin(magnitudes), slope_tdma(magnitudes)});
    }
    return rows;
}

void write_csv(const std::vector<SampleRecord>& records, std::ostream& out) {
    out << "a,sample,s0_tin,s0_tdma,s0_inta,s0_bound,membership,converged\n";
    for (const SampleRecord& r : records) {
        out << fmt17(r.a) << "," << r.sample_index << "," << fmt17(r.s0_tin) << ","
            << fmt17(r.s0_tdma) << "," << fmt17(r.s0_inta) << ",";
        if (r.s0_bound) out << fmt17(*r.s0_bound);
        out << ",";
        if (r.membership) out << (*r.membership ? 1 : 0);
        out << "," << (r.converged ? 1 : 0) << "\n";
    }
}

void write_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << "a,median_inta,s0_tin,s0_tdma\n";
    for (const SweepRow& r : rows)
        out << fmt17(r.a) << "," << fmt17(r.median_inta) << "," << fmt17(r.s0_tin) << ","
            << fmt17(r.s0_tdma) << "\n";
}

void write_csv(const std::vector<SampleRecord>& records, const std::filesystem::path& dest,
               const ExperimentConfig& config) {
    write_csv_file(records, dest, config);
}

void write_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& dest,
               const ExperimentConfig& config) {
    write_csv_file(rows, dest, config);
}

}  // namespace wbslope
