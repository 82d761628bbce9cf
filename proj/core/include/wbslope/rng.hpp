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
#include <numbers>

namespace wbslope {

/// SplitMix64 generator (Steele, Lea and Flood, 2014). One 64-bit state,
/// one multiply-xorshift chain per output. Chosen because the stream for a
/// given seed is identical on every platform and compiler, which the
/// reproducibility contract of the Monte Carlo module depends on; the
/// standard <random> distributions do not give that guarantee.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform angle in [-pi, pi).
    double next_angle() {
        return std::numbers::pi * (2.0 * next_double() - 1.0);
    }

  private:
    std::uint64_t state_;
};

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
}  // namespace detail

/// Stateless combination of a base seed with two stream indices. Used to
/// derive an independent, order-insensitive seed for every Monte Carlo
/// record, so results do not depend on how records are scheduled.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t s1, std::uint64_t s2) {
    std::uint64_t h = detail::mix64(seed + 0x9e3779b97f4a7c15ULL);
    h = detail::mix64(h ^ (s1 + 0x9e3779b97f4a7c15ULL));
    h = detail::mix64(h ^ (s2 + 0x6a09e667f3bcc909ULL));
    return h;
}

}  // namespace wbslope
