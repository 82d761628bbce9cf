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

#include "wbslope/symmetric_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wbslope {

std::vector<double> eigenvalues_symmetric(const Matrix& m) {
    const int n = m.size();
    if (n < 1) throw std::invalid_argument("eigenvalues_symmetric: empty matrix");

    double scale = 0.0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) scale = std::max(scale, std::fabs(m.at(r, c)));
    for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c)
            if (std::fabs(m.at(r, c) - m.at(c, r)) > 1e-10 * std::max(1.0, scale))
                throw std::invalid_argument("eigenvalues_symmetric: matrix is not symmetric");

    // work on a copy; rotations only ever touch the upper triangle pattern
    Matrix a = m;
    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int r = 0; r < n; ++r)
            for (int c = r + 1; c < n; ++c) off += a.at(r, c) * a.at(r, c);
        if (std::sqrt(2.0 * off) <= 1e-14 * std::max(1.0, scale)) break;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a.at(p, q);
                if (apq == 0.0) continue;
                const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (int r = 0; r < n; ++r) {
                    const double arp = a.at(r, p);
                    const double arq = a.at(r, q);
                    a.at(r, p) = c * arp - s * arq;
                    a.at(r, q) = s * arp + c * arq;
                }
                for (int r = 0; r < n; ++r) {
                    const double apr = a.at(p, r);
                    const double aqr = a.at(q, r);
                    a.at(p, r) = c * apr - s * aqr;
                    a.at(q, r) = s * apr + c * aqr;
                }
            }
        }
    }

    std::vector<double> ev(n);
    for (int r = 0; r < n; ++r) ev[r] = a.at(r, r);
    std::sort(ev.begin(), ev.end());
    return ev;
}

}  // namespace wbslope
