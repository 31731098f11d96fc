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
#include <cstdint>
#include <string>
#include <vector>

namespace entcmi {

/// One named tensor factor of a composite Hilbert space.
struct Subsystem {
  std::string name;
  int dim = 0;

  friend bool operator==(const Subsystem& x, const Subsystem& y) {
    return x.name == y.name && x.dim == y.dim;
  }
};

/// Density matrix on a tensor product of named subsystems. The composite
/// basis is ordered with the last subsystem varying fastest, matching the
/// Kronecker product of the factors in list order.
///
/// Construction enforces Hermiticity (max deviation 1e-10, then the matrix
/// is symmetrized), eigenvalues >= -1e-10, and unit trace within 1e-10
/// (then rescaled to trace one exactly).
class DensityMatrix {
 public:
  DensityMatrix(std::vector<Subsystem> subsystems, Eigen::MatrixXcd matrix);

  const std::vector<Subsystem>& subsystems() const { return subs_; }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }

  int sub_index(std::string_view name) const;
  bool has_subsystem(std::string_view name) const;

  static constexpr double kHermTolerance = 1e-10;
  static constexpr double kPsdTolerance = 1e-10;
  static constexpr double kTraceTolerance = 1e-10;

 private:
  std::vector<Subsystem> subs_;
  Eigen::MatrixXcd m_;
};

/// Traces out every subsystem not named in `keep`; the result carries the
/// kept subsystems in the order given by `keep`.
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<std::string>& keep);

/// Tensor product; subsystem names must be disjoint.
DensityMatrix tensor(const DensityMatrix& x, const DensityMatrix& y);

/// Unnormalized-rank `rank` draw from the Ginibre construction G G^dagger,
/// rescaled to unit trace.
DensityMatrix random_density_matrix(std::uint64_t seed,
                                    std::vector<Subsystem> subsystems,
                                    int rank = 0);

}  // namespace entcmi
