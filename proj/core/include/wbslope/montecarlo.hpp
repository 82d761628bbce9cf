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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "wbslope/alignment.hpp"
#include "wbslope/channel.hpp"

namespace wbslope {

/// One Monte Carlo experiment: random-phase symmetric channels at every
/// cross gain in a_values, samples realizations each.
struct ExperimentConfig {
    int k = 10;
    std::vector<double> a_values;
    int samples = 1000;
    std::uint64_t seed = 0;
    int restarts = 32;          // alignment restarts per record
    bool include_bound = false; // also run the outer bound per record
};

/// Slopes of one channel realization. Every random draw in the record's
/// pipeline is seeded from (config seed, a index, sample index) alone, so
/// records are reproducible independently of scheduling.
struct SampleRecord {
    double a = 0.0;
    int sample_index = 0;
    double s0_tin = 0.0;
    double s0_tdma = 0.0;
    double s0_inta = 0.0;
    std::optional<double> s0_bound;   // set when include_bound
    std::optional<bool> membership;   // set when include_bound
    bool converged = false;
    PhaseVector theta_star;
};

/// Runs the experiment; records ordered by (a index, sample index). jobs
/// is the worker-thread count and never affects the byte content of the
/// results.
std::vector<SampleRecord> run_experiment(const ExperimentConfig& config, int jobs = 1);

/// Empirical CDF as (value, cumulative fraction) pairs, ascending, ties
/// collapsed onto the largest index: last pair is always (max, 1).
std::vector<std::pair<double, double>> empirical_cdf(std::vector<double> values);

/// Lower median: sorted[(n - 1) / 2]. Stated convention so regression
/// files stay stable for even counts.
double lower_median(std::vector<double> values);

struct SweepRow {
    double a = 0.0;
    double median_inta = 0.0;
    double s0_tin = 0.0;
    double s0_tdma = 0.0;
};

/// Median s0_inta per a value, alongside the deterministic TIN and TDMA
/// slopes of the magnitude family (phases do not enter either).
std::vector<SweepRow> median_sweep(const ExperimentConfig& config, int jobs = 1);

/// CSV schema: a,sample,s0_tin,s0_tdma,s0_inta,s0_bound,membership,converged
/// with empty fields for options that were off; 17 significant digits, so
/// parsing the file reproduces every double bit-exactly.
void write_csv(const std::vector<SampleRecord>& records, std::ostream& out);

/// CSV schema: a,median_inta,s0_tin,s0_tdma
void write_csv(const std::vector<SweepRow>& rows, std::ostream& out);

/// File variants; also write a "<dest>.meta" sidecar recording the
/// experiment parameters and tool version. I/O failures are reported with
/// the destination path.
void write_csv(const std::vector<SampleRecord>& records, const std::filesystem::path& dest,
               const ExperimentConfig& config);
void write_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& dest,
               const ExperimentConfig& config);

}  // namespace wbslope
