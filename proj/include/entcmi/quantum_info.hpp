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

#include <string>
#include <vector>

#include "entcmi/density_matrix.hpp"
#include "entcmi/info.hpp"
#include "entcmi/joint_pmf.hpp"

namespace entcmi {

/// Clamp windows for quantum information quantities; values more negative
/// than the window raise InvariantError.
inline constexpr double kQuantumMiClampWindow = 1e-10;
inline constexpr double kQuantumCmiClampWindow = 1e-9;

/// Von Neumann entropy in nats. Eigenvalues within 1e-12 of zero are
/// treated as zero; more negative ones raise InvariantError.
double von_neumann_entropy(const DensityMatrix& rho);
double von_neumann_entropy(const Eigen::MatrixXcd& rho);

/// S(A) + S(B) - S(AB) over named subsystem groups.
double quantum_mutual_information(const DensityMatrix& rho,
                                  const std::vector<std::string>& a_subs,
                                  const std::vector<std::string>& b_subs,
                                  ClampDiag* diag = nullptr);

/// S(AC) + S(BC) - S(C) - S(ABC); empty C reduces to mutual information.
double quantum_cmi(const DensityMatrix& rho,
                   const std::vector<std::string>& a_subs,
                   const std::vector<std::string>& b_subs,
                   const std::vector<std::string>& c_subs,
                   ClampDiag* diag = nullptr);

/// Weighted family of states on a shared subsystem list.
struct Ensemble {
  std::vector<double> weights;              // normalized within 1e-12
  std::vector<DensityMatrix> states;        // one per weight
  std::vector<bool> pure;                   // purity declarations
};

void validate_ensemble(const Ensemble& ensemble);

/// Classically correlated state sum_k w_k rho_a^k (x) rho_b^k (x) |k><k|
/// with the flag as the last subsystem, named `flag_name`.
DensityMatrix build_separable(const std::vector<DensityMatrix>& states_a,
                              const std::vector<DensityMatrix>& states_b,
                              const std::vector<double>& weights,
                              const std::string& flag_name = "alpha");

/// Block-diagonal extension sum_k w_k rho_ab^k (x) |k><k| from arbitrary
/// (possibly mixed) members.
DensityMatrix build_k1_state(const Ensemble& ensemble,
                             const std::string& flag_name = "alpha");

/// Same construction restricted to pure members; every state whose purity
/// flag is set must be rank one within 1e-8, and all flags must be set.
DensityMatrix build_k2_state(const Ensemble& ensemble,
                             const std::string& flag_name = "alpha");

}  // namespace entcmi
