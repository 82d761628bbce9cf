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

#include <cmath>

namespace wbslope {

// 2x2 real matrix, row-major: [[a, b], [c, d]].
struct Mat2 {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Mat2 transpose() const { return {a, c, b, d}; }
    double trace() const { return a + d; }
    double det() const { return a * d - b * c; }
};

inline Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}

inline Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}

inline Mat2 operator*(double s, const Mat2& m) {
    return {s * m.a, s * m.b, s * m.c, s * m.d};
}

inline Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

/// Planar rotation by phi radians: [[cos phi, -sin phi], [sin phi, cos phi]].
inline Mat2 rotation(double phi) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    return {c, -s, s, c};
}

/// Largest absolute entry, used for matrix comparisons in tests.
inline double max_abs(const Mat2& m) {
    return std::max(std::max(std::fabs(m.a), std::fabs(m.b)),
                    std::max(std::fabs(m.c), std::fabs(m.d)));
}

}  // namespace wbslope
