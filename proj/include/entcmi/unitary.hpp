// Copyright 2026 The entcmi Authors.
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
#pragma once

#include <Eigen/Dense>
#include <vector>

namespace entcmi {

/// Unconstrained real coordinates for a dim x dim unitary: the first dim
/// entries are the diagonal of a Hermitian generator H, followed by
/// (re, im) pairs for the strictly upper triangle in row-major order.
/// The unitary is exp(i H).
struct UnitaryParams {
  int dim = 0;
  std::vector<double> params;  // length dim * dim

  static UnitaryParams identity(int dim) {
    return UnitaryParams{dim, std::vector<double>(
                                  static_cast<std::size_t>(dim) * dim, 0.0)};
  }
};

Eigen::MatrixXcd params_to_unitary(const UnitaryParams& p);

/// Maps a flat real vector (2 * rows * cols entries: all real parts then all
/// imaginary parts, row-major) onto a complex matrix with orthonormal
/// columns via modified Gram-Schmidt. Degenerate columns fall back to
/// deterministic basis completion. Requires cols <= rows.
Eigen::MatrixXcd params_to_isometry(const double* params, int rows, int cols);

}  // namespace entcmi
