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

#include <utility>
#include <vector>

#include "entcmi/density_matrix.hpp"
#include "entcmi/joint_pmf.hpp"
#include "entcmi/nets.hpp"
#include "entcmi/opt_report.hpp"
#include "entcmi/stochastic_map.hpp"
#include "entcmi/unitary.hpp"

namespace entcmi {

/// Post-selection probabilities below this floor are treated as infeasible.
inline constexpr double kPostSelectFloor = 1e-14;

/// The kept outcome of the primed registers.
struct GammaEvent {
  int a_prime = 0;
  int b_prime = 0;
};

/// Classical local processing: u consumes (A, Ap) into (a, ap), v consumes
/// (B, Bp) into (b, bp), optionally reading (a, ap) when comm_arrow is set.
struct ClassicalLocc {
  StochasticMap u;
  StochasticMap v;
  bool comm_arrow = false;
};

/// Quantum local processing: a unitary on (A, Ap) and one unitary on
/// (B, Bp) per outcome a (a single shared block without the communication
/// arrow).
struct QuantumLocc {
  UnitaryParams u;
  std::vector<UnitaryParams> v;
  bool comm_arrow = false;
};

/// Applies the local maps to independent sources p_x (axes A, B) and p_xp
/// (axes Ap, Bp), then conditions on (ap, bp) = gamma. Returns the
/// conditional law over (a, b) and the probability of the kept event.
/// Throws InfeasibleError below kPostSelectFloor.
std::pair<JointPmf, double> classical_post_state(const JointPmf& p_x,
                                                 const JointPmf& p_xp,
                                                 const ClassicalLocc& locc,
                                                 const GammaEvent& gamma);

/// Quantum analogue for states rho_x (subsystems A, B) and rho_xp
/// (subsystems Ap, Bp): applies U on (A, Ap) and V^a on (B, Bp), projects
/// the primed registers onto gamma, and dephases in a. Returns the
/// normalized post state over (a, b) and the kept-event probability.
std::pair<DensityMatrix, double> quantum_post_state(
    const DensityMatrix& rho_x, const DensityMatrix& rho_xp,
    const QuantumLocc& locc, const GammaEvent& gamma);

/// Distillable correlation estimate: maximizes over local maps (u, v) the
/// minimum of I(a : b | lambda) over extensions of the post-selected state
/// with |lambda| = n_lambda. The reported value is a max of upper bounds
/// (heuristic); for two-valued outcomes without communication it is floored
/// by an exhaustive enumeration of deterministic maps.
OptReport classical_ed(const JointPmf& p_x, const JointPmf& p_xp,
                       int n_lambda, const ExtensionBudget& budget,
                       bool comm_arrow = false, const GammaEvent& gamma = {});

/// Quantum counterpart over parametrized local unitaries; the inner
/// minimization is the bounded-channel formation solver at dim_lambda.
OptReport quantum_ed(const DensityMatrix& rho_x, const DensityMatrix& rho_xp,
                     int dim_lambda, const ExtensionBudget& budget,
                     bool comm_arrow = false, const GammaEvent& gamma = {});

/// One processed-net comparison at matched family sizes, with the source
/// chain identities evaluated on the full ancestor joint.
struct EdEfCheckReport {
  OptReport ed;
  OptReport ef_x;
  OptReport ef_xp;
  double ef_sum = 0.0;
  double margin = 0.0;  // ef_sum - ed.best_value
  bool violation = false;
  // |I(AAp : BBp | alpha, alphap) - I(A : B | alpha) - I(Ap : Bp | alphap)|
  double source_split_residual = 0.0;
  // |I(AAp : BBp | alpha, alphap) - same conditioned on the kept event|
  double gamma_indep_residual = 0.0;
  // I(AAp : BBp | alpha, alphap) - I(a : b | alpha, alphap, kept event)
  double processed_margin = 0.0;
  double p_gamma = 0.0;
};

/// Requires comm_arrow = false (the comparison needs the independence of
/// the two local wings); throws std::invalid_argument otherwise. n_family
/// sets both the inner extension size of the distillation bound and the
/// family sizes of the two formation costs.
EdEfCheckReport check_ed_le_ef(const Fig2Spec& spec, int n_family,
                               const ExtensionBudget& budget,
                               const GammaEvent& gamma = {},
                               double slack = 1e-6);

}  // namespace entcmi
