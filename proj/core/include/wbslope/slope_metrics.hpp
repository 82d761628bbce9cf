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

#include <functional>
#include <string>

#include "wbslope/channel.hpp"

namespace wbslope {

/// Sum rate in bits/s/Hz as a function of total transmit power P >= 0,
/// with noise spectral density fixed to one. Evaluators must satisfy
/// R(0) = 0 and be smooth near zero; label identifies the scheme in
/// diagnostics.
struct RateCurve {
    std::function<double(double)> evaluate;
    std::string label;
};

/// Low-power figures extracted from a rate curve: minimum energy per bit
/// Eb/N0|min (linear scale, not dB) and wideband slope S0.
struct SlopeEstimate {
    double ebno_min = 0.0;
    double s0 = 0.0;
};

/// Minimum energy per bit under the equal-power-split constraint
/// P_j = P/K: K ln2 / sum_j |C_jj|^2.
double ebno_min_equal_power(const Channel& ch);

/// Wideband slope with all cross links removed:
/// 2 (sum_j |C_jj|^2)^2 / sum_j |C_jj|^4.
double slope_no_interference(const Channel& ch);

/// Wideband slope of time sharing in fractions 1/K; equals
/// slope_no_interference / K and is computed that way so the unit-gain
/// family yields exactly 2.
double slope_tdma(const Channel& ch);

/// Wideband slope when every receiver treats interference as noise.
double slope_tin(const Channel& ch);

/// Sum rate of treating interference as noise at total power p_sum:
/// sum_j log2(1 + |C_jj|^2 p / (K + p sum_{i != j} |C_ji|^2)).
double rsum_tin(const Channel& ch, double p_sum);

/// Sum rate of TDMA at total power p_sum:
/// (1/K) sum_j log2(1 + |C_jj|^2 p).
double rsum_tdma(const Channel& ch, double p_sum);

RateCurve tin_curve(const Channel& ch);
RateCurve tdma_curve(const Channel& ch);

/// One-sided finite-difference extraction of Eb/N0|min and S0 from a
/// rate curve, the reference oracle the closed forms are checked against.
///
/// The curve is in bits; both derivatives are converted to nats before
/// applying ebno_min = ln2 / R'(0) and s0 = -2 R'(0)^2 / R''(0), which
/// hold in nats (applied to a bit-based curve they would be off by ln2).
/// R'(0) uses the second-order stencil (4R(h) - R(2h)) / 2h and R''(0)
/// the second-order stencil (2R(0) - 5R(h) + 4R(2h) - R(3h)) / h^2.
/// Throws std::runtime_error if the curvature estimate is below 1e-12 in
/// magnitude (slope ill-conditioned).
SlopeEstimate slope_from_rate_curve(const RateCurve& curve, double step = 1e-4);

/// Report with the three closed-form schemes and their slope ratios
/// filled in; optimized entries are left empty for callers to add.
SlopeReport baseline_report(const Channel& ch);

}  // namespace wbslope
