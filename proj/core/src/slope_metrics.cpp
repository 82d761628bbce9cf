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

#include "wbslope/slope_metrics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wbslope {

namespace {

constexpr double kLn2 = std::numbers::ln2;

double sum_direct(const Channel& ch) {
    double s = 0.0;
    for (int j = 0; j < ch.k; ++j) s += ch.direct_gain(j);
    return s;
}

double sum_direct_sq(const Channel& ch) {
    double s = 0.0;
    for (int j = 0; j < ch.k; ++j) s += ch.direct_gain(j) * ch.direct_gain(j);
    return s;
}

double log2_1p(double x) { return std::log1p(x) / kLn2; }

}  // namespace

double ebno_min_equal_power(const Channel& ch) {
    return ch.k * kLn2 / sum_direct(ch);
}

double slope_no_interference(const Channel& ch) {
    const double s = sum_direct(ch);
    return 2.0 * (s * s) / sum_direct_sq(ch);
}

double slope_tdma(const Channel& ch) {
    return slope_no_interference(ch) / ch.k;
}

double slope_tin(const Channel& ch) {
    const double s = sum_direct(ch);
    double denom = 0.0;
    for (int j = 0; j < ch.k; ++j) {
        const double dj = ch.direct_gain(j);
        double cross = 0.0;
        for (int i = 0; i < ch.k; ++i)
            if (i != j) cross += ch.gain(j, i);
        denom += dj * dj + 2.0 * dj * cross;
    }
    return 2.0 * (s * s) / denom;
}

double rsum_tin(const Channel& ch, double p_sum) {
    if (p_sum < 0.0) throw std::invalid_argument("rsum_tin: p_sum must be nonnegative");
    double r = 0.0;
    for (int j = 0; j < ch.k; ++j) {
        double cross = 0.0;
        for (int i = 0; i < ch.k; ++i)
            if (i != j) cross += ch.gain(j, i);
        r += log2_1p(ch.direct_gain(j) * p_sum / (ch.k + p_sum * cross));
    }
    return r;
}

double rsum_tdma(const Channel& ch, double p_sum) {
    if (p_sum < 0.0) throw std::invalid_argument("rsum_tdma: p_sum must be nonnegative");
    double r = 0.0;
    for (int j = 0; j < ch.k; ++j) r += log2_1p(ch.direct_gain(j) * p_sum);
    return r / ch.k;
}

RateCurve tin_curve(const Channel& ch) {
    return {[ch](double p) { return rsum_tin(ch, p); }, "tin"};
}

RateCurve tdma_curve(const Channel& ch) {
    return {[ch](double p) { return rsum_tdma(ch, p); }, "tdma"};
}

SlopeEstimate slope_from_rate_curve(const RateCurve& curve, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("slope_from_rate_curve: step must be positive");
    const double h = step;
    const double r0 = curve.evaluate(0.0);
    const double r1 = curve.evaluate(h);
    const double r2 = curve.evaluate(2.0 * h);
    const double r3 = curve.evaluate(3.0 * h);

    const double rdot_bits = (4.0 * r1 - r2) / (2.0 * h);
    const double rddot_bits = (2.0 * r0 - 5.0 * r1 + 4.0 * r2 - r3) / (h * h);
    const double rdot = rdot_bits * kLn2;    // nats
    const double rddot = rddot_bits * kLn2;  // nats

    if (std::fabs(rddot) < 1e-12)
        throw std::runtime_error("slope_from_rate_curve: curvature below 1e-12 for '" +
                                 curve.label + "', slope ill-conditioned");
    if (!(rdot > 0.0))
        throw std::runtime_error("slope_from_rate_curve: nonpositive rate derivative for '" +
                                 curve.label + "'");

    return {kLn2 / rdot, -2.0 * rdot * rdot / rddot};
}

SlopeReport baseline_report(const Channel& ch) {
    SlopeReport r;
    r.ebno_min = ebno_min_equal_power(ch);
    r.s0_no_interference = slope_no_interference(ch);
    r.s0_tdma = slope_tdma(ch);
    r.s0_tin = slope_tin(ch);
    r.delta_s0["no_interference"] = r.s0_no_interference / r.s0_no_interference;
    r.delta_s0["tdma"] = r.s0_tdma / r.s0_no_interference;
    r.delta_s0["tin"] = r.s0_tin / r.s0_no_interference;
    return r;
}

}  // namespace wbslope
