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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "wbslope/slope_metrics.hpp"

namespace {

using namespace wbslope;

constexpr double kLn2 = std::numbers::ln2;

double rel_err(double got, double want) {
    return std::fabs(got - want) / std::fabs(want);
}

}  // namespace

TEST_CASE("extraction recovers the single-user AWGN anchors") {
    // R(p) = log2(1 + p) has Eb/N0|min = ln 2 and slope 2; any error in
    // the bits-to-nats handling would show up here as a factor ln 2
    const RateCurve awgn{[](double p) { return std::log1p(p) / kLn2; }, "awgn"};
    const SlopeEstimate est = slope_from_rate_curve(awgn);
    CHECK(rel_err(est.ebno_min, kLn2) < 1e-6);
    CHECK(rel_err(est.s0, 2.0) < 1e-6);
}

TEST_CASE("extraction handles rescaled power") {
    // R(p) = log2(1 + 2p): twice the first derivative, slope still 2
    const RateCurve curve{[](double p) { return std::log1p(2.0 * p) / kLn2; }, "awgn2"};
    const SlopeEstimate est = slope_from_rate_curve(curve);
    CHECK(rel_err(est.ebno_min, kLn2 / 2.0) < 1e-6);
    CHECK(rel_err(est.s0, 2.0) < 1e-6);
}

TEST_CASE("extraction refuses curvature-free curves") {
    const RateCurve linear{[](double p) { return p; }, "linear"};
    CHECK_THROWS_AS(slope_from_rate_curve(linear), std::runtime_error);
}

TEST_CASE("minimum energy per bit under equal power split") {
    const Channel ch = make_channel(2, {1, 0, 0, 3}, {0, 0, 0, 0});
    CHECK(ebno_min_equal_power(ch) == doctest::Approx(2.0 * kLn2 / 4.0).epsilon(1e-12));
    // unit-gain family: K ln2 / K = ln2 at every size
    CHECK(ebno_min_equal_power(make_symmetric(10, 0.9)) ==
          doctest::Approx(kLn2).epsilon(1e-12));
}

TEST_CASE("interference-free slope") {
    const Channel single = make_channel(1, {1}, {0});
    CHECK(slope_no_interference(single) == doctest::Approx(2.0).epsilon(1e-12));
    const Channel ch = make_channel(2, {1, 0, 0, 3}, {0, 0, 0, 0});
    // 2 * 16 / 10
    CHECK(slope_no_interference(ch) == doctest::Approx(3.2).epsilon(1e-12));
    CHECK(slope_no_interference(make_symmetric(10, 0.5)) ==
          doctest::Approx(20.0).epsilon(1e-12));
}

TEST_CASE("time sharing slope is exactly two on unit gains") {
    // bit-for-bit, not approximately: the division happens after the
    // interference-free slope evaluates to exactly 2K
    for (int k = 2; k <= 12; ++k)
        for (double a : {0.0, 0.1, 0.9, 1.0})
            CHECK(slope_tdma(make_symmetric(k, a)) == 2.0);
}

TEST_CASE("treating interference as noise, closed form") {
    CHECK(slope_tin(make_symmetric(10, 0.5)) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(slope_tin(make_symmetric(10, 0.1)) ==
          doctest::Approx(200.0 / 28.0).epsilon(1e-12));
    CHECK(slope_tin(make_symmetric(10, 1.0)) ==
          doctest::Approx(200.0 / 190.0).epsilon(1e-12));
    CHECK(slope_tin(make_symmetric(2, 0.25)) ==
          doctest::Approx(8.0 / 3.0).epsilon(1e-12));
    // interference off reduces to the interference-free slope
    CHECK(slope_tin(make_symmetric(4, 0.0)) ==
          doctest::Approx(slope_no_interference(make_symmetric(4, 0.0))).epsilon(1e-12));
}

TEST_CASE("finite-power sum rates at hand-checked points") {
    const Channel two = make_symmetric(2, 0.0);
    // TDMA: each user transmits alone at full power half the time
    CHECK(rsum_tdma(two, 3.0) == doctest::Approx(2.0).epsilon(1e-12));
    // TIN with no cross gains: 2 log2(1 + p/2) at p = 2
    CHECK(rsum_tin(two, 2.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rsum_tin(two, 0.0) == 0.0);
    CHECK(rsum_tdma(two, 0.0) == 0.0);
    CHECK_THROWS_AS(rsum_tin(two, -1.0), std::exception);
    CHECK_THROWS_AS(rsum_tdma(two, -1.0), std::exception);
}

TEST_CASE("finite differences agree with the closed forms") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const int k = 2 + static_cast<int>(seed % 4);
        const Channel ch = sample_random(k, 0.1 + 0.08 * static_cast<double>(seed), seed);

        const SlopeEstimate tin = slope_from_rate_curve(tin_curve(ch));
        CHECK(rel_err(tin.s0, slope_tin(ch)) < 1e-3);
        CHECK(rel_err(tin.ebno_min, ebno_min_equal_power(ch)) < 1e-4);

        const SlopeEstimate tdma = slope_from_rate_curve(tdma_curve(ch));
        CHECK(rel_err(tdma.s0, slope_tdma(ch)) < 1e-3);
        CHECK(rel_err(tdma.ebno_min, ebno_min_equal_power(ch)) < 1e-4);
    }
}

TEST_CASE("baseline report wires the ratios") {
    const Channel ch = make_symmetric(10, 0.5);
    const SlopeReport rep = baseline_report(ch);
    CHECK(rep.ebno_min == doctest::Approx(kLn2).epsilon(1e-12));
    CHECK(rep.s0_no_interference == doctest::Approx(20.0).epsilon(1e-12));
    CHECK(rep.s0_tdma == 2.0);
    CHECK(rep.s0_tin == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(!rep.s0_inta.has_value());
    CHECK(!rep.s0_outer_bound.has_value());
    REQUIRE(rep.delta_s0.size() == 3);
    CHECK(rep.delta_s0.at("no_interference") == doctest::Approx(1.0));
    CHECK(rep.delta_s0.at("tdma") == doctest::Approx(0.1));
    CHECK(rep.delta_s0.at("tin") == doctest::Approx(0.1));
}
