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

#include <cstddef>
#include <vector>

namespace wbslope {

/// Dense real square matrix, row-major; just enough surface for
/// assembling small covariance matrices and feeding the eigensolver.
class Matrix {
  public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0.0) {}

    int size() const { return n_; }
    double& at(int r, int c) { return data_[static_cast<std::size_t>(r) * n_ + c]; }
    double at(int r, int c) const { return data_[static_cast<std::size_t>(r) * n_ + c]; }
    const std::vector<double>& data() const { return data_; }

  private:
    int n_ = 0;
    std::vector<double> data_;
};

/// All eigenvalues of a symmetric matrix, ascending. Cyclic-by-row Jacobi
/// sweeps; plenty for the n <= 64 covariance matrices this library builds,
/// where it reaches near machine precision. Inputs whose asymmetry
/// exceeds 1e-10 relative to the largest entry are rejected with
/// std::invalid_argument.
std::vector<double> eigenvalues_symmetric(const Matrix& m);

}  // namespace wbslope
