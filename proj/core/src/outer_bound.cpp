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

#include "wbslope/outer_bound.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wbslope/rng.hpp"

namespace wbslope {

namespace {

// membership probe power used by slope_outer_bound: small enough to sit
// far inside every feasible region met in practice, strictly positive so
// a pass witnesses feasibility at positive power
constexpr double kMembershipProbePower = 1e-6;

void check_cov_count(const Channel& ch, const std::vector<Sym2>& cov, const char* who) {
    if (static_cast<int>(cov.size()) != ch.k)
        throw std::invalid_argument(std::string(who) + ": need one covariance per user");
}

void check_profile(const Channel& ch, const CovProfile& profile, const char* who) {
    check_cov_count(ch, profile, who);
    for (const Sym2& m : profile)
        if (!is_normalized_covariance(m))
            throw std::invalid_argument(std::string(who) +
                                        ": profile entries must be PSD with unit trace");
}

// --- disk parameterization -------------------------------------------------
//
// Vhat = I/2 + [[v1, v3], [v3, -v1]] maps the PSD trace-one constraint to
// |v| <= 1/2, Tr(Vhat^2) to 1/2 + 2|v|^2, and the conjugated trace term
// Tr(Vhat_j U(phi) Vhat_i U(phi)^T) to 1/2 + 2 v_j . R(2 phi) v_i, which
// turns the denominator into a constant plus a homogeneous quadratic.

struct V2 {
    double x = 0.0;
    double y = 0.0;
};

V2 to_v(const Sym2& m) { return {(m.a11 - m.a22) / 2.0, m.a12}; }
Sym2 from_v(const V2& v) { return {0.5 + v.x, 0.5 - v.x, v.y}; }

V2 rot_apply(double c, double s, const V2& v) { return {c * v.x - s * v.y, s * v.x + c * v.y}; }
V2 rot_apply_t(double c, double s, const V2& v) { return {c * v.x + s * v.y, -s * v.x + c * v.y}; }

struct PairTerm {
    int j;
    int i;
    double w;  // |C_jj|^2 |C_ji|^2, ordered j < i
    double c;  // cos 2 phi_ji
    double s;  // sin 2 phi_ji
};

struct Quadratic {
    int k = 0;
    double c0 = 0.0;             // denominator at v = 0
    std::vector<double> diag;    // 4 d_j^2
    std::vector<PairTerm> pairs;
    double lipschitz = 1.0;
};

Quadratic build_quadratic(const Channel& ch) {
    Quadratic q;
    q.k = ch.k;
    q.diag.resize(ch.k);
    std::vector<double> row(ch.k, 0.0);
    for (int j = 0; j < ch.k; ++j) {
        const double dj = ch.direct_gain(j);
        q.c0 += dj * dj / 2.0;
        q.diag[j] = 4.0 * dj * dj;
        row[j] += dj * dj;
        for (int i = j + 1; i < ch.k; ++i) {
            const double w = dj * ch.gain(j, i);
            q.c0 += w;
            if (w > 0.0) {
                const double phi = 2.0 * ch.phase_at(j, i);
                q.pairs.push_back({j, i, w, std::cos(phi), std::sin(phi)});
                row[j] += w;
                row[i] += w;
            }
        }
    }
    // Gershgorin bound on the quadratic's spectral radius; rotations have
    // operator norm one, so block row sums bound every eigenvalue
    double l = 0.0;
    for (int j = 0; j < ch.k; ++j) l = std::max(l, 4.0 * row[j]);
    q.lipschitz = std::max(l, 1e-30);
    return q;
}

double quad_value(const Quadratic& q, const std::vector<V2>& v) {
    double d = q.c0;
    for (int j = 0; j < q.k; ++j) d += 0.5 * q.diag[j] * (v[j].x * v[j].x + v[j].y * v[j].y);
    for (const PairTerm& p : q.pairs) {
        const V2 rv = rot_apply(p.c, p.s, v[p.i]);
        d += 4.0 * p.w * (v[p.j].x * rv.x + v[p.j].y * rv.y);
    }
    return d;
}

void quad_grad(const Quadratic& q, const std::vector<V2>& v, std::vector<V2>& g) {
    for (int j = 0; j < q.k; ++j) g[j] = {q.diag[j] * v[j].x, q.diag[j] * v[j].y};
    for (const PairTerm& p : q.pairs) {
        const V2 rv = rot_apply(p.c, p.s, v[p.i]);
        g[p.j].x += 4.0 * p.w * rv.x;
        g[p.j].y += 4.0 * p.w * rv.y;
        const V2 rtv = rot_apply_t(p.c, p.s, v[p.j]);
        g[p.i].x += 4.0 * p.w * rtv.x;
        g[p.i].y += 4.0 * p.w * rtv.y;
    }
}

void project(std::vector<V2>& v) {
    for (V2& e : v) {
        const double n = std::sqrt(e.x * e.x + e.y * e.y);
        if (n > 0.5) {
            const double s = 0.5 / n;
            e.x *= s;
            e.y *= s;
        }
    }
}

// Largest per-user violation of the first-order conditions: gradient norm
// in the interior, tangential gradient plus any outward radial push on
// the boundary.
double kkt_residual(const std::vector<V2>& v, const std::vector<V2>& g) {
    double res = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        const double n = std::sqrt(v[j].x * v[j].x + v[j].y * v[j].y);
        double rj;
        if (n < 0.5 - 1e-9) {
            rj = std::sqrt(g[j].x * g[j].x + g[j].y * g[j].y);
        } else {
            const double radial = (g[j].x * v[j].x + g[j].y * v[j].y) / n;
            const double keep = std::min(0.0, radial);  // inward push is admissible
            const double tx = g[j].x - keep * v[j].x / n;
            const double ty = g[j].y - keep * v[j].y / n;
            rj = std::sqrt(tx * tx + ty * ty);
        }
        res = std::max(res, rj);
    }
    return res;
}

}  // namespace

bool is_normalized_covariance(const Sym2& m, double tol) {
    if (std::fabs(m.trace() - 1.0) > tol) return false;
    if (m.a11 < -tol || m.a22 < -tol) return false;
    return m.det() >= -tol;
}

CovProfile rank_one_profile(const PhaseVector& theta) {
    CovProfile p;
    p.reserve(theta.size());
    for (const double t : theta) {
        const double c = std::cos(t), s = std::sin(t);
        p.push_back({c * c, s * s, s * c});
    }
    return p;
}

Mat2 side_info_block(const Channel& ch, const std::vector<Sym2>& cov, int j, int p) {
    check_cov_count(ch, cov, "side_info_block");
    if (j < 2 || j > ch.k || p < 1 || p >= j)
        throw std::invalid_argument("side_info_block: need 1 <= p < j <= k");
    const int j0 = j - 1, p0 = p - 1;
    const double dj = ch.direct_gain(j0);
    const double ratio = ch.gain(p0, j0) / dj;
    const double phi_pj = ch.phase_at(p0, j0);

    Mat2 a = ratio * rotation(-phi_pj);
    for (int i0 = j; i0 < ch.k; ++i0) {  // users j+1..K, 0-based i0
        const double gji = ch.gain(j0, i0);
        if (gji == 0.0) continue;
        const double phi_ji = ch.phase_at(j0, i0);
        const Mat2 vi = cov[i0].to_mat2();
        const Mat2 left = rotation(phi_ji) * vi;
        a = a + (ratio * gji) * (left * rotation(-phi_pj - phi_ji));
        const double gpi = ch.gain(p0, i0);
        if (gpi > 0.0) a = a - (gji * gpi) * (left * rotation(-ch.phase_at(p0, i0)));
    }
    return a;
}

Matrix side_info_covariance(const Channel& ch, const std::vector<Sym2>& cov, int j) {
    check_cov_count(ch, cov, "side_info_covariance");
    if (j < 2 || j > ch.k)
        throw std::invalid_argument("side_info_covariance: need 2 <= j <= k");
    Matrix m(2 * j);
    for (int r = 1; r <= j; ++r) {
        m.at(2 * r - 2, 2 * r - 2) = 1.0;
        m.at(2 * r - 1, 2 * r - 1) = 1.0;
        for (int c = r + 1; c <= j; ++c) {
            const Mat2 blk = side_info_block(ch, cov, j - r + 1, j - c + 1);
            const int r0 = 2 * (r - 1), c0 = 2 * (c - 1);
            m.at(r0, c0) = blk.a;
            m.at(r0, c0 + 1) = blk.b;
            m.at(r0 + 1, c0) = blk.c;
            m.at(r0 + 1, c0 + 1) = blk.d;
            m.at(c0, r0) = blk.a;
            m.at(c0, r0 + 1) = blk.c;
            m.at(c0 + 1, r0) = blk.b;
            m.at(c0 + 1, r0 + 1) = blk.d;
        }
    }
    return m;
}

std::vector<PsdCertificate> check_membership(const Channel& ch, double per_user_power,
                                             double tol, const CovProfile* profile) {
    if (per_user_power < 0.0)
        throw std::invalid_argument("check_membership: per_user_power must be nonnegative");
    if (!(tol > 0.0)) throw std::invalid_argument("check_membership: tol must be positive");
    if (profile) check_profile(ch, *profile, "check_membership");

    std::vector<Sym2> cov(ch.k);
    for (int i = 0; i < ch.k; ++i) {
        const Sym2 vhat = profile ? (*profile)[i] : Sym2{0.5, 0.5, 0.0};
        cov[i] = vhat.scaled(per_user_power);
    }

    std::vector<PsdCertificate> certs;
    certs.reserve(std::max(0, ch.k - 1));
    for (int j = 2; j <= ch.k; ++j) {
        PsdCertificate c;
        c.j_index = j;
        c.eigenvalues = eigenvalues_symmetric(side_info_covariance(ch, cov, j));
        c.min_eigenvalue = c.eigenvalues.front();
        const double norm =
            std::max(std::fabs(c.eigenvalues.front()), std::fabs(c.eigenvalues.back()));
        c.tolerance = tol * std::max(1.0, norm);
        c.is_psd = c.min_eigenvalue >= -c.tolerance;
        c.at_boundary = c.is_psd && c.min_eigenvalue < 0.0;
        certs.push_back(std::move(c));
    }
    return certs;
}

bool membership_passes(const std::vector<PsdCertificate>& certs) {
    return std::all_of(certs.begin(), certs.end(),
                       [](const PsdCertificate& c) { return c.is_psd; });
}

double max_feasible_power(const Channel& ch, double tol, double p_hi) {
    if (!(p_hi > 0.0)) throw std::invalid_argument("max_feasible_power: p_hi must be positive");
    auto passes = [&](double p) { return membership_passes(check_membership(ch, p, tol)); };
    if (!passes(0.0))
        throw std::invalid_argument("max_feasible_power: channel fails membership at zero power");
    if (passes(p_hi))
        throw std::runtime_error("max_feasible_power: membership still holds at p_hi; "
                                 "no threshold below p_hi (it may not exist at all)");
    double lo = 0.0, hi = p_hi;
    while (hi - lo > 1e-8) {
        const double mid = 0.5 * (lo + hi);
        (passes(mid) ? lo : hi) = mid;
    }
    return lo;
}

double bound_denominator(const Channel& ch, const CovProfile& profile) {
    check_profile(ch, profile, "bound_denominator");
    double d = 0.0;
    for (int j = 0; j < ch.k; ++j) {
        const double dj = ch.direct_gain(j);
        d += dj * dj * profile[j].trace_sq();
        for (int i = j + 1; i < ch.k; ++i) {
            const double w = dj * ch.gain(j, i);
            if (w == 0.0) continue;
            const Mat2 u = rotation(ch.phase_at(j, i));
            const Mat2 prod = profile[j].to_mat2() * u * profile[i].to_mat2() * u.transpose();
            d += 2.0 * w * prod.trace();
        }
    }
    return d;
}

DenominatorMinimum minimize_denominator(const Channel& ch, const BoundOptions& opt) {
    if (opt.restarts < 0)
        throw std::invalid_argument("minimize_denominator: restarts must be nonnegative");
    if (!(opt.tol > 0.0)) throw std::invalid_argument("minimize_denominator: tol must be positive");
    if (opt.max_iterations < 1)
        throw std::invalid_argument("minimize_denominator: max_iterations must be at least 1");

    const int k = ch.k;
    const Quadratic q = build_quadratic(ch);
    const double step = 1.0 / q.lipschitz;
    SplitMix64 rng(opt.seed);

    // start list: v = 0 first, then caller warm starts, then random draws
    std::vector<std::vector<V2>> starts;
    starts.emplace_back(k, V2{});
    if (opt.align_warm_start && k >= 2) {
        AlignmentOptions ao;
        ao.restarts = 8;
        ao.seed = mix_seed(opt.seed, 0x616c69676eULL, 0);
        const AlignmentResult ar = optimize_phases(ch, ao);
        CovProfile rp = rank_one_profile(ar.theta_star);
        std::vector<V2> v(k);
        for (int j = 0; j < k; ++j) v[j] = to_v(rp[j]);
        project(v);
        starts.push_back(std::move(v));
    }
    for (const CovProfile& w : opt.warm_starts) {
        check_profile(ch, w, "minimize_denominator");
        std::vector<V2> v(k);
        for (int j = 0; j < k; ++j) v[j] = to_v(w[j]);
        project(v);
        starts.push_back(std::move(v));
    }
    for (int r = 0; r < opt.restarts; ++r) {
        std::vector<V2> v(k);
        for (int j = 0; j < k; ++j) {
            // uniform over the radius-1/2 disk
            const double rad = 0.5 * std::sqrt(rng.next_double());
            const double ang = rng.next_angle();
            v[j] = {rad * std::cos(ang), rad * std::sin(ang)};
        }
        starts.push_back(std::move(v));
    }

    std::vector<V2> g(k), best_v;
    double best_val = 0.0, best_res = 0.0;
    bool have_best = false;

    for (std::vector<V2>& v : starts) {
        quad_grad(q, v, g);
        double res = kkt_residual(v, g);
        for (int it = 0; it < opt.max_iterations && res > opt.tol; ++it) {
            for (int j = 0; j < k; ++j) {
                v[j].x -= step * g[j].x;
                v[j].y -= step * g[j].y;
            }
            project(v);
            quad_grad(q, v, g);
            res = kkt_residual(v, g);
        }
        const double val = quad_value(q, v);
        // strict improvement keeps the earliest (v = 0, then warm) start
        // on ties, which pins the exact symmetric answer
        if (!have_best || val < best_val - 1e-12) {
            best_v = v;
            best_val = val;
            best_res = res;
            have_best = true;
        }
    }

    DenominatorMinimum m;
    m.profile.reserve(k);
    for (const V2& v : best_v) m.profile.push_back(from_v(v));
    m.value = best_val;
    m.kkt_residual = best_res;
    m.converged = best_res <= opt.tol;
    return m;
}

OuterBoundResult slope_outer_bound(const Channel& ch, const BoundOptions& opt) {
    OuterBoundResult r;
    r.minimum = minimize_denominator(ch, opt);
    double sum_d = 0.0;
    for (int j = 0; j < ch.k; ++j) sum_d += ch.direct_gain(j);
    r.slope = sum_d * sum_d / r.minimum.value;
    r.certificates = check_membership(ch, kMembershipProbePower);
    r.membership = membership_passes(r.certificates);
    r.converged = r.minimum.converged;
    return r;
}

double symmetric_outer_bound(int k, double alpha) {
    if (k < 2) throw std::invalid_argument("symmetric_outer_bound: k must be at least 2");
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("symmetric_outer_bound: alpha must lie in (0, 1)");
    return 2.0 * k / (alpha * k + 1.0 - alpha);
}

}  // namespace wbslope
