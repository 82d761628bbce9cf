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

#include "wbslope/alignment.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wbslope/rng.hpp"

namespace wbslope {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

double wrap_angle(double x) {
    // maps to [-pi, pi); the boundary +pi lands on -pi
    double w = x - 2.0 * kPi * std::floor((x + kPi) / (2.0 * kPi));
    if (w >= kPi) w -= 2.0 * kPi;
    return w;
}

void check_theta(const Channel& ch, const PhaseVector& theta, const char* who) {
    if (static_cast<int>(theta.size()) != ch.k)
        throw std::invalid_argument(std::string(who) + ": theta must have k entries");
}

// One cross link j <- i with weight |C_jj|^2 |C_ji|^2.
struct Term {
    int j;
    int i;
    double w;
    double phi;
};

std::vector<Term> cross_terms(const Channel& ch) {
    std::vector<Term> terms;
    terms.reserve(static_cast<std::size_t>(ch.k) * (ch.k - 1));
    for (int j = 0; j < ch.k; ++j)
        for (int i = 0; i < ch.k; ++i)
            if (i != j) {
                const double w = ch.direct_gain(j) * ch.gain(j, i);
                if (w > 0.0) terms.push_back({j, i, w, ch.phase_at(j, i)});
            }
    return terms;
}

double cost_of(const std::vector<Term>& terms, const PhaseVector& theta) {
    double f = 0.0;
    for (const Term& t : terms)
        f += t.w * std::cos(2.0 * (t.phi - theta[t.j] + theta[t.i]));
    return f;
}

// Cost and gradient in one pass; grad must be zero-initialized.
double cost_grad(const std::vector<Term>& terms, const PhaseVector& theta,
                 std::vector<double>& grad) {
    double f = 0.0;
    for (const Term& t : terms) {
        const double arg = 2.0 * (t.phi - theta[t.j] + theta[t.i]);
        f += t.w * std::cos(arg);
        const double s = 2.0 * t.w * std::sin(arg);
        grad[t.j] += s;
        grad[t.i] -= s;
    }
    return f;
}

// Cost, gradient and the reduced Hessian (theta[0] pinned, so row/col 0 is
// dropped) in one pass. hess is row-major (k-1)x(k-1), zero-initialized.
double cost_grad_hess(const std::vector<Term>& terms, const PhaseVector& theta,
                      std::vector<double>& grad, std::vector<double>& hess, int n) {
    double f = 0.0;
    for (const Term& t : terms) {
        const double arg = 2.0 * (t.phi - theta[t.j] + theta[t.i]);
        const double co = std::cos(arg);
        f += t.w * co;
        const double s = 2.0 * t.w * std::sin(arg);
        grad[t.j] += s;
        grad[t.i] -= s;
        const double c4 = 4.0 * t.w * co;
        const int rj = t.j - 1, ri = t.i - 1;
        if (rj >= 0) hess[rj * n + rj] -= c4;
        if (ri >= 0) hess[ri * n + ri] -= c4;
        if (rj >= 0 && ri >= 0) {
            hess[rj * n + ri] += c4;
            hess[ri * n + rj] += c4;
        }
    }
    return f;
}

// Solves (hess + lambda I) s = -grad[1..] by Cholesky on the reduced
// coordinates; false when the shifted matrix is not positive definite.
bool shifted_newton_step(int n, const std::vector<double>& hess, double lambda,
                         const std::vector<double>& grad, std::vector<double>& s) {
    std::vector<double> fac(hess);
    for (int r = 0; r < n; ++r) fac[r * n + r] += lambda;
    for (int c = 0; c < n; ++c) {
        double d = fac[c * n + c];
        for (int m = 0; m < c; ++m) d -= fac[c * n + m] * fac[c * n + m];
        if (!(d > 1e-300)) return false;
        d = std::sqrt(d);
        fac[c * n + c] = d;
        for (int r = c + 1; r < n; ++r) {
            double v = fac[r * n + c];
            for (int m = 0; m < c; ++m) v -= fac[r * n + m] * fac[c * n + m];
            fac[r * n + c] = v / d;
        }
    }
    s.assign(n, 0.0);
    for (int r = 0; r < n; ++r) {
        double v = -grad[r + 1];
        for (int c = 0; c < r; ++c) v -= fac[r * n + c] * s[c];
        s[r] = v / fac[r * n + r];
    }
    for (int r = n - 1; r >= 0; --r) {
        double v = s[r];
        for (int c = r + 1; c < n; ++c) v -= fac[c * n + r] * s[c];
        s[r] = v / fac[r * n + r];
    }
    return true;
}

// 2x2 symmetric matrix in (trace/2, deviation) coordinates is overkill
// here; plain component storage keeps the rate expression readable.
struct Sym {
    double a11, a22, a12;
};

// Rank-one unit-trace covariance along direction theta.
Sym projector(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {c * c, s * s, s * c};
}

// U(phi) * m * U(-phi): the projector of a rotated direction.
Sym rotate(const Sym& m, double phi) {
    const double c = std::cos(2.0 * phi), s = std::sin(2.0 * phi);
    const double v1 = (m.a11 - m.a22) / 2.0, v3 = m.a12;
    const double h = (m.a11 + m.a22) / 2.0;
    const double r1 = c * v1 - s * v3, r3 = s * v1 + c * v3;
    return {h + r1, h - r1, r3};
}

// log2 det(I + x m) through log1p; exact enough for the 1e-4 steps the
// slope extraction uses.
double log2_det_1p(const Sym& m, double x) {
    const double tr = m.a11 + m.a22;
    const double det = m.a11 * m.a22 - m.a12 * m.a12;
    return std::log1p(x * tr + x * x * det) / kLn2;
}

}  // namespace

double phase_cost(const Channel& ch, const PhaseVector& theta) {
    check_theta(ch, theta, "phase_cost");
    return cost_of(cross_terms(ch), theta);
}

PhaseVector phase_cost_gradient(const Channel& ch, const PhaseVector& theta) {
    check_theta(ch, theta, "phase_cost_gradient");
    std::vector<double> grad(theta.size(), 0.0);
    cost_grad(cross_terms(ch), theta, grad);
    return grad;
}

AlignmentResult optimize_phases(const Channel& ch, const AlignmentOptions& opt) {
    if (opt.restarts < 1)
        throw std::invalid_argument("optimize_phases: restarts must be at least 1");
    if (!(opt.tol > 0.0))
        throw std::invalid_argument("optimize_phases: tol must be positive");
    if (opt.max_iterations < 1)
        throw std::invalid_argument("optimize_phases: max_iterations must be at least 1");

    const int k = ch.k;
    const std::vector<Term> terms = cross_terms(ch);
    SplitMix64 rng(opt.seed);

    AlignmentResult best;
    best.restarts_used = opt.restarts;
    bool have_best = false;
    double best_gnorm = 0.0;
    constexpr double kTieEps = 1e-9;

    const int n = k - 1;  // reduced dimension, theta[0] pinned
    std::vector<double> grad(k, 0.0), trial_grad(k, 0.0);
    std::vector<double> hess(static_cast<std::size_t>(n) * n, 0.0), newton(n, 0.0);
    PhaseVector theta(k, 0.0), trial(k, 0.0);

    // Newton is only attempted once descent has pulled the gradient below
    // this scale; a rejected attempt falls back to a plain descent step.
    constexpr double kNewtonTrigger = 1.0;

    for (int r = 0; r < opt.restarts; ++r) {
        // start 0 probes perfect gauge zero; the rest are uniform draws
        theta.assign(k, 0.0);
        if (r > 0)
            for (int j = 1; j < k; ++j) theta[j] = rng.next_angle();

        grad.assign(k, 0.0);
        double f = cost_grad(terms, theta, grad);
        double step = 1.0;
        double lambda = 0.0;
        double gnorm = 0.0;
        for (int j = 1; j < k; ++j) gnorm += grad[j] * grad[j];
        gnorm = std::sqrt(gnorm);

        for (int it = 0; it < opt.max_iterations && gnorm > opt.tol; ++it) {
            bool advanced = false;
            if (n > 0 && gnorm <= kNewtonTrigger) {
                // damped Newton: escalate the shift until the step is
                // positive definite and decreases the cost (or, right at
                // the numerical floor, still shrinks the gradient)
                hess.assign(hess.size(), 0.0);
                grad.assign(k, 0.0);
                f = cost_grad_hess(terms, theta, grad, hess, n);
                double hscale = 1e-30;
                for (int j = 0; j < n; ++j) hscale = std::max(hscale, std::fabs(hess[j * n + j]));
                for (int attempt = 0; attempt < 30 && !advanced; ++attempt) {
                    if (!shifted_newton_step(n, hess, lambda, grad, newton)) {
                        lambda = lambda == 0.0 ? 1e-6 * hscale : lambda * 8.0;
                        continue;
                    }
                    trial = theta;
                    for (int j = 1; j < k; ++j) trial[j] += newton[j - 1];
                    trial_grad.assign(k, 0.0);
                    const double fn = cost_grad(terms, trial, trial_grad);
                    double gn = 0.0;
                    for (int j = 1; j < k; ++j) gn += trial_grad[j] * trial_grad[j];
                    gn = std::sqrt(gn);
                    if (fn < f || (fn <= f + 1e-12 * (1.0 + std::fabs(f)) && gn < 0.5 * gnorm)) {
                        theta.swap(trial);
                        grad.swap(trial_grad);
                        f = fn;
                        gnorm = gn;
                        lambda *= 0.25;
                        if (lambda < 1e-10 * hscale) lambda = 0.0;
                        advanced = true;
                    } else {
                        lambda = lambda == 0.0 ? 1e-6 * hscale : lambda * 8.0;
                    }
                }
            }
            if (!advanced) {
                // backtracking line search, Armijo 1e-4, warm-started step
                step = std::min(step * 2.0, 1.0e3);
                const double g2 = gnorm * gnorm;
                double fn = f;
                while (true) {
                    trial = theta;
                    for (int j = 1; j < k; ++j) trial[j] -= step * grad[j];
                    fn = cost_of(terms, trial);
                    if (fn <= f - 1e-4 * step * g2 || step < 1e-18) break;
                    step *= 0.5;
                }
                theta.swap(trial);
                trial_grad.assign(k, 0.0);
                f = cost_grad(terms, theta, trial_grad);
                grad.swap(trial_grad);
                gnorm = 0.0;
                for (int j = 1; j < k; ++j) gnorm += grad[j] * grad[j];
                gnorm = std::sqrt(gnorm);
            }
        }

        // canonical form: gauge already fixed by theta[0] = 0, wrap the rest
        for (int j = 1; j < k; ++j) theta[j] = wrap_angle(theta[j]);

        bool take = !have_best || f < best.cost_star - kTieEps;
        if (!take && have_best && f <= best.cost_star + kTieEps)
            take = theta < best.theta_star;  // lexicographic tie-break
        if (take) {
            best.theta_star = theta;
            best.cost_star = f;
            best_gnorm = gnorm;
            have_best = true;
        }
    }

    best.converged = best_gnorm <= opt.tol;
    best.slope = slope_one_dim(ch, best.theta_star);
    return best;
}

double slope_one_dim(const Channel& ch, const PhaseVector& theta) {
    check_theta(ch, theta, "slope_one_dim");
    double sum_d = 0.0, sum_d2 = 0.0, cross = 0.0;
    for (int j = 0; j < ch.k; ++j) {
        const double dj = ch.direct_gain(j);
        sum_d += dj;
        sum_d2 += dj * dj;
        for (int i = 0; i < ch.k; ++i)
            if (i != j) cross += dj * ch.gain(j, i);
    }
    const double denom = sum_d2 + cross + phase_cost(ch, theta);
    if (!(denom > 0.0))
        throw std::runtime_error("slope_one_dim: degenerate denominator");
    return sum_d * sum_d / denom;
}

double rsum_one_dim(const Channel& ch, const PhaseVector& theta, double p_sum) {
    check_theta(ch, theta, "rsum_one_dim");
    if (p_sum < 0.0) throw std::invalid_argument("rsum_one_dim: p_sum must be nonnegative");
    const double x = 2.0 * p_sum / ch.k;
    double r = 0.0;
    for (int j = 0; j < ch.k; ++j) {
        Sym noise{0.0, 0.0, 0.0};
        for (int i = 0; i < ch.k; ++i) {
            if (i == j) continue;
            const Sym vi = rotate(projector(theta[i]), ch.phase_at(j, i));
            const double g = ch.gain(j, i);
            noise.a11 += g * vi.a11;
            noise.a22 += g * vi.a22;
            noise.a12 += g * vi.a12;
        }
        const Sym pj = projector(theta[j]);
        const double dj = ch.direct_gain(j);
        const Sym sig{noise.a11 + dj * pj.a11, noise.a22 + dj * pj.a22,
                      noise.a12 + dj * pj.a12};
        r += 0.5 * (log2_det_1p(sig, x) - log2_det_1p(noise, x));
    }
    return r;
}

RateCurve one_dim_curve(const Channel& ch, PhaseVector theta) {
    return {[ch, theta = std::move(theta)](double p) { return rsum_one_dim(ch, theta, p); },
            "one_dim"};
}

}  // namespace wbslope
