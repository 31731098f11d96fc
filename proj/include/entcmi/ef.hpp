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

#include "entcmi/density_matrix.hpp"
#include "entcmi/joint_pmf.hpp"
#include "entcmi/opt_report.hpp"

namespace entcmi {

/// Formation cost of a bipartite pmf (exactly two axes): the minimum of the
/// conditional mutual information I(a : b | alpha) over all extensions
/// P(a, b, alpha) with the given marginal and |alpha| = budget.n_alpha
/// (default n_a * n_b). n_alpha = 1 returns the mutual information exactly.
OptReport classical_ef(const JointPmf& p_ab, const ExtensionBudget& budget);

/// Formation cost of a bipartite density matrix over pure-member ensembles:
/// minimizes sum_k w_k [S(rho_a^k) + S(rho_b^k)] over ensembles of
/// budget.n_alpha pure states (default (d_a d_b)^2) averaging to rho. This
/// equals the flagged-extension conditional mutual information because each
/// member is pure.
OptReport quantum_ef_k2(const DensityMatrix& rho_ab,
                        const ExtensionBudget& budget);

/// Same minimization over ensembles of possibly mixed members, obtained by
/// stochastically grouping a fine pure ensemble into budget.n_alpha blocks.
/// Seeded with the pure-member optimum, so the result never exceeds
/// quantum_ef_k2 at the same family size.
OptReport quantum_ef_k1(const DensityMatrix& rho_ab,
                        const ExtensionBudget& budget);

/// Extension-agnostic bound: minimizes I(a : b | lambda) over states
/// rho_{a,b,lambda} obtained from a purification of rho by an isometry into
/// a dim_lambda-level system plus an environment of budget.env_dim levels
/// (default: the rank of rho). dim_lambda = 1 returns the quantum mutual
/// information exactly.
OptReport quantum_ef_k0_bounded(const DensityMatrix& rho_ab, int dim_lambda,
                                const ExtensionBudget& budget);

}  // namespace entcmi
