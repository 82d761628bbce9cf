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

#include <benchmark/benchmark.h>

#include "wbslope/alignment.hpp"
#include "wbslope/outer_bound.hpp"
#include "wbslope/symmetric_eigen.hpp"

namespace {

using namespace wbslope;

Channel bench_channel(int k) { return sample_random(k, 0.5, 42); }

void bm_phase_cost(benchmark::State& state) {
    const Channel ch = bench_channel(10);
    PhaseVector theta(10, 0.1);
    for (auto _ : state) benchmark::DoNotOptimize(phase_cost(ch, theta));
}
BENCHMARK(bm_phase_cost);

void bm_phase_cost_gradient(benchmark::State& state) {
    const Channel ch = bench_channel(10);
    PhaseVector theta(10, 0.1);
    for (auto _ : state) benchmark::DoNotOptimize(phase_cost_gradient(ch, theta));
}
BENCHMARK(bm_phase_cost_gradient);

void bm_optimize_phases(benchmark::State& state) {
    const Channel ch = bench_channel(static_cast<int>(state.range(0)));
    AlignmentOptions opt;
    opt.restarts = 8;
    for (auto _ : state) benchmark::DoNotOptimize(optimize_phases(ch, opt));
}
BENCHMARK(bm_optimize_phases)->Arg(3)->Arg(10);

void bm_side_info_eigenvalues(benchmark::State& state) {
    const Channel ch = bench_channel(10);
    const CovProfile cov(10, Sym2{0.5, 0.5, 0.0});
    for (auto _ : state) {
        const Matrix m = side_info_covariance(ch, cov, 10);
        benchmark::DoNotOptimize(eigenvalues_symmetric(m));
    }
}
BENCHMARK(bm_side_info_eigenvalues);

void bm_minimize_denominator(benchmark::State& state) {
    const Channel ch = bench_channel(10);
    BoundOptions opt;
    opt.restarts = 4;
    for (auto _ : state) benchmark::DoNotOptimize(minimize_denominator(ch, opt));
}
BENCHMARK(bm_minimize_denominator);

void bm_rsum_one_dim(benchmark::State& state) {
    const Channel ch = bench_channel(10);
    const PhaseVector theta(10, 0.1);
    for (auto _ : state) benchmark::DoNotOptimize(rsum_one_dim(ch, theta, 1.0));
}
BENCHMARK(bm_rsum_one_dim);

}  // namespace

BENCHMARK_MAIN();
