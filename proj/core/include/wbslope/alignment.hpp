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
#include <vector>

#include "wbslope/channel.hpp"
#include "wbslope/slope_metrics.hpp"

namespace wbslope {

/// Per-user one-dimensional signaling directions theta_j, radians.
using PhaseVector = std::vector<double>;

struct AlignmentOptions {
    int restarts = 32;           // multi-start count; start 0 is theta = 0
    std::uint64_t seed = 0;      // seeds the random restarts
    double tol = 1e-8;           // gradient-norm convergence target
    int max_iterations = 10000;  // descent iterations per start
};

struct AlignmentResult {
    PhaseVector theta_star;  // gauge-fixed: theta_star[0] == 0, entries in [-pi, pi)
    double cost_star = 0.0;
    double slope = 0.0;      // slope_one_dim at theta_star
    int restarts_used = 0;
    bool converged = false;  // gradient norm at theta_star met tol
};

/// Residual-interference cost of a direction choice:
///   f(theta) = sum_j sum_{i != j} |C_jj|^2 |C_ji|^2
///              cos 2(phi_ji - theta_j + theta_i).
/// Bounded by sum_j sum_{i != j} |C_jj|^2 |C_ji|^2 in absolute value and
/// invariant under a common shift of all theta_j.
double phase_cost(const Channel& ch, const PhaseVector& theta);

/// Analytic gradient of phase_cost; entries sum to zero (the common-shift
/// direction is flat).
PhaseVector phase_cost_gradient(const Channel& ch, const PhaseVector& theta);

/// Multi-start descent on phase_cost, theta_1 pinned to zero: gradient
/// steps with backtracking line search until a basin is reached, then a
/// damped Newton polish that drives the gradient norm to tol. Start 0
/// probes theta = 0, the remaining starts draw uniform directions from
/// the seed; descent never increases the cost, so the result is never
/// worse than the zero start.
/// Ties between stationary points are broken toward the lexicographically
/// smallest gauge-fixed direction vector, making the result a
/// deterministic function of (channel, options).
AlignmentResult optimize_phases(const Channel& ch, const AlignmentOptions& opt = {});

/// Wideband slope of one-dimensional signaling at fixed directions:
///   (sum_j |C_jj|^2)^2 /
///   (sum_j |C_jj|^4 + sum_j sum_{i != j} |C_jj|^2 |C_ji|^2 + f(theta)).
/// Note the absence of the leading factor 2: restricting every user to
/// one signaling dimension halves the interference-free slope, so perfect
/// alignment recovers slope_no_interference / 2, not slope_no_interference.
double slope_one_dim(const Channel& ch, const PhaseVector& theta);

/// Sum rate of one-dimensional signaling at total power p_sum, bits/s/Hz.
/// Each term is the log-det rate of a two-dimensional real channel whose
/// inputs are rank-one covariances along the chosen directions; its
/// finite-difference slope at zero reproduces slope_one_dim.
double rsum_one_dim(const Channel& ch, const PhaseVector& theta, double p_sum);

RateCurve one_dim_curve(const Channel& ch, PhaseVector theta);

}  // namespace wbslope
