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

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "entcmi/joint_pmf.hpp"
#include "entcmi/nets.hpp"
#include "entcmi/opt_report.hpp"
#include "entcmi/stochastic_map.hpp"

namespace entcmi {

/// Margin of the relative-entropy contraction: D(P || Q) - D(TP || TQ),
/// non-negative up to rounding. Returns +infinity when D(P || Q) diverges.
double check_dpi_relative_entropy(const JointPmf& p, const JointPmf& q,
                                  const StochasticMap& t);

/// Margin of the conditional-mutual-information contraction on the
/// hidden-variable net: I(x : y | lambda) - I(a : b | lambda).
double check_dpi_cmi(const Fig3Spec& spec);

/// The product channel T(a, b | x, y) = P(a | x) P(b | y).
StochasticMap build_product_map(const StochasticMap& p_a_given_x,
                                const StochasticMap& p_b_given_y);

/// Max-abs residuals of the structural identities of the hidden-variable
/// net, each expected to vanish.
struct Fig3IdentityReport {
  double markov_a = 0.0;            // P(a|l) vs sum_x P(a|x) P(x|l)
  double markov_b = 0.0;            // P(b|l) vs sum_y P(b|y) P(y|l)
  double independence_ab = 0.0;     // P(a,b|l) vs P(a|l) P(b|l)
  double independence_xy = 0.0;     // P(x,y|l) vs P(x|l) P(y|l)
  double transport_joint = 0.0;     // P(a,b|l) vs T applied to P(x,y|l)
  double transport_product = 0.0;   // marginal products under T
  double max_residual = 0.0;
};

Fig3IdentityReport verify_fig3_identities(const Fig3Spec& spec);

struct CmiMiWitness {
  JointPmf pmf;
  double cmi = 0.0;
  double mi = 0.0;
};

struct SweepConfig {
  int trials = 100;
  std::uint64_t seed = 0;
  int min_card = 2;
  int max_card = 4;
  double slack = 1e-12;
  ExtensionBudget budget;  // used by the formation/distillation sweep only
};

/// One pmf with conditioning strictly increasing the dependence and one
/// with conditioning destroying it. The deterministic parity and copy
/// constructions pin the gaps at ln 2 exactly; random trials may widen
/// them.
std::pair<CmiMiWitness, CmiMiWitness> search_cmi_vs_mi(
    const SweepConfig& config);

enum class SweepKind {
  kDpiRelativeEntropy,
  kDpiCmi,
  kFig3Identities,
  kEdLeEf,
  kCmiVsMi,
};

std::string to_string(SweepKind kind);

struct ViolationRecord {
  int trial = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  nlohmann::json instance;
};

struct SweepReport {
  SweepKind kind = SweepKind::kDpiRelativeEntropy;
  int trials = 0;
  std::uint64_t seed = 0;
  double slack = 0.0;
  double worst_margin = 0.0;
  std::vector<ViolationRecord> violations;
};

/// Chain-identity tolerance used inside the formation/distillation sweep.
inline constexpr double kChainResidualTolerance = 1e-10;

/// Runs `config.trials` random instances of the requested check. A trial's
/// margin measures how comfortably the property holds; any margin below
/// -config.slack (or, for the distillation sweep, any chain residual above
/// kChainResidualTolerance) is recorded as a violation.
SweepReport run_sweep(SweepKind kind, const SweepConfig& config);

}  // namespace entcmi
