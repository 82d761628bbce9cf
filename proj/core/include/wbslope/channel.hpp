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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wbslope/mat2.hpp"

namespace wbslope {

/// Flat-fading K-user interference channel. Entry (j, i) describes the
/// link from transmitter i to receiver j, split into the squared magnitude
/// |C_ji|^2 and the phase of C_ji. Direct links sit on the diagonal.
///
/// Conventions baked in here and relied on everywhere else:
///  - the noise spectral density is one (N0 B = 1), so gains are relative;
///  - phases live in [-pi, pi) and direct links carry phase zero;
///  - direct gains are strictly positive, cross gains are nonnegative.
///
/// Channels are value types; treat them as immutable after construction.
/// Build them through make_channel / make_symmetric / sample_random /
/// load_channel, which enforce the invariants above.
struct Channel {
    int k = 0;
    std::vector<double> gain_sq;  // row-major k*k, gain_sq[j*k + i] = |C_ji|^2
    std::vector<double> phase;    // row-major k*k, radians, zero diagonal

    /// Squared magnitude |C_ji|^2, indices 0-based.
    double gain(int j, int i) const { return gain_sq[static_cast<std::size_t>(j) * k + i]; }
    /// Link phase in radians, indices 0-based.
    double phase_at(int j, int i) const { return phase[static_cast<std::size_t>(j) * k + i]; }
    /// Direct-link squared magnitude |C_jj|^2.
    double direct_gain(int j) const { return gain(j, j); }
};

/// Validating constructor; both vectors row-major with k*k entries.
Channel make_channel(int k, std::vector<double> gain_sq, std::vector<double> phase);

/// Symmetric family used throughout: unit direct gains, cross gains a,
/// zero phases. Requires k >= 2 and a >= 0.
Channel make_symmetric(int k, double a);

/// Same magnitudes with caller-supplied phases (row-major k*k, diagonal
/// entries must be zero).
Channel make_symmetric(int k, double a, const std::vector<double>& phase);

/// Symmetric magnitudes with cross-link phases drawn i.i.d. uniform on
/// [-pi, pi) from a SplitMix64 stream; identical seeds give identical
/// channels on every platform.
Channel sample_random(int k, double a, std::uint64_t seed);

/// Plain-text serialization. Format, all values at 17 significant digits:
///   wbslope-channel v1
///   k=<int>
///   g <j> <i> <gain_sq>   (k*k lines, 1-based indices, row-major)
///   p <j> <i> <phase>     (k*k lines, 1-based indices, row-major)
void save_channel(const Channel& ch, const std::filesystem::path& dest);

/// Inverse of save_channel. Throws std::runtime_error with the offending
/// path and line on parse failure, and on invariant violations.
Channel load_channel(const std::filesystem::path& src);

/// Slope summary for one channel: minimum energy per bit, wideband slopes
/// of the closed-form schemes, optional optimized/bounded entries, and the
/// slope ratios relative to interference-free transmission.
struct SlopeReport {
    double ebno_min = 0.0;
    double s0_no_interference = 0.0;
    double s0_tdma = 0.0;
    double s0_tin = 0.0;
    std::optional<double> s0_inta;
    std::optional<double> s0_outer_bound;
    std::map<std::string, double> delta_s0;  // scheme -> s0 / s0_no_interference
};

}  // namespace wbslope
