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

#include "wbslope/alignment.hpp"
#include "wbslope/channel.hpp"
#include "wbslope/mat2.hpp"
#include "wbslope/symmetric_eigen.hpp"

namespace wbslope {

/// Symmetric 2x2 matrix; the storage type for per-user input covariances
/// on the two-dimensional real signal space.
struct Sym2 {
    double a11 = 0.0;
    double a22 = 0.0;
    double a12 = 0.0;

    double trace() const { return a11 + a22; }
    double det() const { return a11 * a22 - a12 * a12; }
    double trace_sq() const { return a11 * a11 + a22 * a22 + 2.0 * a12 * a12; }
    Sym2 scaled(double s) const { return {s * a11, s * a22, s * a12}; }
    Mat2 to_mat2() const { return {a11, a12, a12, a22}; }
};

/// True when m is PSD with unit trace, the constraint set for normalized
/// input covariances; tol is the absolute slack on both conditions.
bool is_normalized_covariance(const Sym2& m, double tol = 1e-9);

/// One normalized covariance per user, index 0-based by user.
using CovProfile = std::vector<Sym2>;

/// Rank-one normalized covariances along the given directions; the
/// covariance profile realized by one-dimensional signaling.
CovProfile rank_one_profile(const PhaseVector& theta);

/// Cross-covariance block between receiver j's effective noise and the
/// genie noise it shares with receiver p, for the successive
/// side-information construction in which receiver j learns the messages
/// of users j+1..K. Indices are 1-based (1 <= p < j <= k) to match how
/// certificates are reported; cov holds the unnormalized input
/// covariances V_i, 0-based by user, of which only users j+1..K enter.
/// Generally not symmetric.
Mat2 side_info_block(const Channel& ch, const std::vector<Sym2>& cov, int j, int p);

/// Joint covariance of receiver j's noise and its genie noises, a j-by-j
/// grid of 2x2 blocks (2j-by-2j total): identity diagonal, block (r, c)
/// above the diagonal equal to side_info_block(j - r + 1, j - c + 1),
/// transposes below. Exactly symmetric by construction. The construction
/// is valid, and the outer bound applies, exactly when this matrix is PSD
/// for every j.
Matrix side_info_covariance(const Channel& ch, const std::vector<Sym2>& cov, int j);

/// PSD test result for one receiver's side-information covariance.
struct PsdCertificate {
    int j_index = 0;                  // receiver, 1-based, 2..k
    std::vector<double> eigenvalues;  // ascending, length 2 * j_index
    double min_eigenvalue = 0.0;
    double tolerance = 0.0;           // absolute threshold: tol * matrix 2-norm
    bool is_psd = false;              // min_eigenvalue >= -tolerance
    bool at_boundary = false;         // passed with min_eigenvalue < 0
};

/// Certificates for j = 2..k at per-user power P, with V_i = P * Vhat_i
/// and Vhat_i = I/2 unless a profile is supplied. tol is relative to each
/// matrix's 2-norm.
std::vector<PsdCertificate> check_membership(const Channel& ch, double per_user_power,
                                             double tol = 1e-10,
                                             const CovProfile* profile = nullptr);

bool membership_passes(const std::vector<PsdCertificate>& certs);

/// Largest per-user power below which membership holds, located by
/// bisection on [0, p_hi] to absolute precision 1e-8. The channel must
/// pass at zero power; throws std::runtime_error if membership still
/// holds at p_hi (some channels, the exactly symmetric zero-phase family
/// among them, pass at every power and have no finite threshold).
double max_feasible_power(const Channel& ch, double tol = 1e-10, double p_hi = 10.0);

/// Denominator of the slope outer bound at a covariance profile:
///   sum_j |C_jj|^4 Tr(Vhat_j^2)
///   + 2 sum_{j<i} |C_jj|^2 |C_ji|^2 Tr(Vhat_j U_ji Vhat_i U_ji^T),
/// U_ji the rotation by phase phi_ji. Only ordered pairs j < i appear:
/// the bound's genie runs in one direction, which is what leaves it above
/// every one-dimensional achievable slope.
double bound_denominator(const Channel& ch, const CovProfile& profile);

struct BoundOptions {
    int restarts = 8;             // random starts beyond the built-in ones
    std::uint64_t seed = 0;
    double tol = 1e-8;            // KKT residual target
    int max_iterations = 10000;   // projected-gradient iterations per start
    bool align_warm_start = true; // seed with a rank-one profile from a
                                  // short run of optimize_phases
    std::vector<CovProfile> warm_starts;  // caller-supplied extra starts
};

struct DenominatorMinimum {
    CovProfile profile;
    double value = 0.0;
    double kkt_residual = 0.0;
    bool converged = false;
};

/// Minimizes bound_denominator over products of PSD trace-one matrices by
/// projected gradient descent in the disk parameterization
/// Vhat_j = I/2 + [[v1, v3], [v3, -v1]], |v_j| <= 1/2. The all-I/2
/// profile (v = 0, a stationary point of the unconstrained quadratic) is
/// always probed first, then caller warm starts, then random starts, so
/// the result is never worse than any supplied profile. Deterministic for
/// fixed options.
DenominatorMinimum minimize_denominator(const Channel& ch, const BoundOptions& opt = {});

struct OuterBoundResult {
    double slope = 0.0;
    DenominatorMinimum minimum;
    std::vector<PsdCertificate> certificates;  // probe at power 1e-6
    bool membership = false;  // certificates all passed, so the bound
                              // provably applies at some positive power
    bool converged = false;
};

/// Wideband-slope outer bound (sum_j |C_jj|^2)^2 / min bound_denominator,
/// with a membership probe at per-user power 1e-6 recorded alongside.
/// The numeric value is computed for any channel; membership=false means
/// the genie construction failed there and the value is not certified.
OuterBoundResult slope_outer_bound(const Channel& ch, const BoundOptions& opt = {});

/// Closed form of the bound for the symmetric family (unit direct gains,
/// cross gains alpha, any phases): 2k / (alpha k + 1 - alpha).
/// Requires k >= 2 and 0 < alpha < 1.
double symmetric_outer_bound(int k, double alpha);

}  // namespace wbslope
