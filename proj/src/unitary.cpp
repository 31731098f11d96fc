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
#include "entcmi/unitary.hpp"

#include <complex>
#include <stdexcept>

namespace entcmi {

Eigen::MatrixXcd params_to_unitary(const UnitaryParams& p) {
  if (p.dim <= 0 ||
      p.params.size() != static_cast<std::size_t>(p.dim) * p.dim) {
    throw std::invalid_argument("unitary parameter vector has wrong length");
  }
  const int d = p.dim;
  Eigen::MatrixXcd h(d, d);
  for (int i = 0; i < d; ++i) h(i, i) = p.params[i];
  std::size_t k = static_cast<std::size_t>(d);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const std::complex<double> z(p.params[k], p.params[k + 1]);
      k += 2;
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  Eigen::VectorXcd phases(d);
  for (int i = 0; i < d; ++i) {
    phases[i] = std::exp(std::complex<double>(0.0, es.eigenvalues()[i]));
  }
  return es.eigenvectors() * phases.asDiagonal() *
         es.eigenvectors().adjoint();
}

Eigen::MatrixXcd params_to_isometry(const double* params, int rows,
                                    int cols) {
  if (cols > rows || rows <= 0 || cols <= 0) {
    throw std::invalid_argument("isometry needs 0 < cols <= rows");
  }
  Eigen::MatrixXcd z(rows, cols);
  const double* re = params;
  const double* im = params + static_cast<std::size_t>(rows) * cols;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      z(i, j) = std::complex<double>(re[i * cols + j], im[i * cols + j]);
    }
  }
  constexpr double kDegenerate = 1e-12;
  for (int j = 0; j < cols; ++j) {
    for (int k = 0; k < j; ++k) {
      z.col(j) -= z.col(k).dot(z.col(j)) * z.col(k);
    }
    double norm = z.col(j).norm();
    if (norm < kDegenerate) {
      // Replace a collapsed column with the first basis vector not already
      // spanned, keeping the map total and deterministic.
      for (int e = 0; e < rows; ++e) {
        z.col(j).setZero();
        z.col(j)[e] = 1.0;
        for (int k = 0; k < j; ++k) {
          z.col(j) -= z.col(k).dot(z.col(j)) * z.col(k);
        }
        norm = z.col(j).norm();
        if (norm >= kDegenerate) break;
      }
    }
    z.col(j) /= norm;
  }
  return z;
}

}  // namespace entcmi
