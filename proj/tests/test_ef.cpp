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
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "entcmi/density_matrix.hpp"
#include "entcmi/ef.hpp"
#include "entcmi/errors.hpp"
#include "entcmi/info.hpp"
#include "entcmi/joint_pmf.hpp"
#include "entcmi/quantum_info.hpp"
#include "entcmi/sampling.hpp"
#include "support/oracles.hpp"

namespace entcmi {
namespace {

DensityMatrix bell_state() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
  return DensityMatrix({Subsystem{"a", 2}, Subsystem{"b", 2}}, m);
}

DensityMatrix werner_state(double p) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity() * ((1.0 - p) / 4.0);
  m(0, 0) += 0.5 * p;
  m(0, 3) += 0.5 * p;
  m(3, 0) += 0.5 * p;
  m(3, 3) += 0.5 * p;
  return DensityMatrix({Subsystem{"a", 2}, Subsystem{"b", 2}}, m);
}

DensityMatrix random_separable(std::uint64_t seed, int n_alpha,
                               const std::vector<double>& w) {
  std::vector<DensityMatrix> as, bs;
  for (int k = 0; k < n_alpha; ++k) {
    as.push_back(
        random_density_matrix(seed * 31 + k, {Subsystem{"a", 2}}, 1));
    bs.push_back(
        random_density_matrix(seed * 47 + k + 1, {Subsystem{"b", 2}}, 1));
  }
  return partial_trace(build_separable(as, bs, w), {"a", "b"});
}

double ensemble_objective(const OptReport& report) {
  const auto& w = report.best_params.at("weights");
  const auto& re = report.best_params.at("members_re");
  const auto& im = report.best_params.at("members_im");
  long double total = 0.0L;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const double weight = w[k].get<double>();
    if (weight < 1e-14) continue;
    Eigen::VectorXcd v(4);
    for (int i = 0; i < 4; ++i) {
      v[i] = std::complex<double>(re[k][i].get<double>(),
                                  im[k][i].get<double>());
    }
    const Eigen::MatrixXcd rho = v * v.adjoint();
    total +=
        weight * (oracle::vn_entropy(oracle::ptrace(rho, {2, 2}, {0})) +
                  oracle::vn_entropy(oracle::ptrace(rho, {2, 2}, {1})));
  }
  return static_cast<double>(total);
}

TEST(ClassicalEfTest, LargeFamilyCollapsesToZero) {
  Rng rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const JointPmf p = random_joint_pmf(rng, {Axis{"a", 2}, Axis{"b", 2}});
    ExtensionBudget budget;
    budget.n_alpha = 4;
    budget.seed = static_cast<std::uint64_t>(trial);
    const OptReport report = classical_ef(p, budget);
    EXPECT_LE(report.best_value, 1e-9);
    EXPECT_TRUE(report.converged);
    EXPECT_EQ(report.bound_direction, BoundDirection::kUpperBoundOfMin);
  }
}

TEST(ClassicalEfTest, TrivialFamilyIsExactlyMutualInformation) {
  Rng rng(5);
  const JointPmf p = random_joint_pmf(rng, {Axis{"a", 3}, Axis{"b", 2}});
  ExtensionBudget budget;
  budget.n_alpha = 1;
  const OptReport report = classical_ef(p, budget);
  EXPECT_EQ(report.best_value, mutual_information(p, {"a"}, {"b"}));
  EXPECT_TRUE(report.converged);
}

TEST(ClassicalEfTest, CorrelatedBitsNeedOnlyTwoValues) {
  const JointPmf p({Axis{"a", 2}, Axis{"b", 2}}, {0.5, 0.0, 0.0, 0.5});
  ExtensionBudget budget;
  budget.n_alpha = 2;
  const OptReport report = classical_ef(p, budget);
  EXPECT_LE(report.best_value, 1e-9);
}

TEST(ClassicalEfTest, ReportedConditionalReproducesTheValue) {
  Rng rng(7);
  const JointPmf p = random_joint_pmf(rng, {Axis{"a", 2}, Axis{"b", 2}});
  ExtensionBudget budget;
  budget.n_alpha = 2;
  budget.restarts = 4;
  const OptReport report = classical_ef(p, budget);
  const auto cond =
      report.best_params.at("p_alpha_given_ab").get<std::vector<double>>();
  ASSERT_EQ(cond.size(), 8u);
  std::vector<double> ext(8);
  for (int ab = 0; ab < 4; ++ab) {
    for (int k = 0; k < 2; ++k) {
      ext[static_cast<std::size_t>(ab) * 2 + k] = p[ab] * cond[ab * 2 + k];
    }
  }
  const JointPmf joint({Axis{"a", 2}, Axis{"b", 2}, Axis{"alpha", 2}}, ext);
  const JointPmf marg = marginalize(joint, {"a", "b"});
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(marg[i], p[i], 1e-9);
  }
  EXPECT_NEAR(conditional_mutual_information(joint, {"a"}, {"b"}, {"alpha"}),
              report.best_value, 1e-9);
}

TEST(ClassicalEfTest, NonIncreasingInFamilySize) {
  Rng rng(11);
  const JointPmf p = random_joint_pmf(rng, {Axis{"a", 2}, Axis{"b", 2}});
  double prev = mutual_information(p, {"a"}, {"b"});
  for (int n_alpha = 2; n_alpha <= 4; ++n_alpha) {
    ExtensionBudget budget;
    budget.n_alpha = n_alpha;
    budget.seed = 2;
    const double value = classical_ef(p, budget).best_value;
    EXPECT_LE(value, prev + 1e-6);
    prev = value;
  }
}

TEST(ClassicalEfTest, DeterministicPerSeedAndBudget) {
  Rng rng(13);
  const JointPmf p = random_joint_pmf(rng, {Axis{"a", 2}, Axis{"b", 2}});
  ExtensionBudget budget;
  budget.n_alpha = 2;
  budget.seed = 77;
  budget.restarts = 3;
  const OptReport r1 = classical_ef(p, budget);
  const OptReport r2 = classical_ef(p, budget);
  EXPECT_EQ(r1.best_value, r2.best_value);
  EXPECT_EQ(r1.evaluations, r2.evaluations);
  EXPECT_EQ(r1.converged, r2.converged);
  EXPECT_EQ(r1.best_params, r2.best_params);
}

TEST(ClassicalEfTest, RejectsBadBudgets) {
  const JointPmf p({Axis{"a", 2}, Axis{"b", 2}}, {0.25, 0.25, 0.25, 0.25});
  ExtensionBudget bad;
  bad.restarts = 0;
  EXPECT_THROW(classical_ef(p, bad), ConfigError);
  bad = ExtensionBudget{};
  bad.tolerance = 0.0;
  EXPECT_THROW(classical_ef(p, bad), ConfigError);
  const JointPmf three({Axis{"a", 2}, Axis{"b", 2}, Axis{"c", 2}},
                       std::vector<double>(8, 0.125));
  EXPECT_THROW(classical_ef(three, ExtensionBudget{}),
               std::invalid_argument);
}

TEST(QuantumEfK2Test, BellStateCostsTwoLn2) {
  ExtensionBudget budget;
  const OptReport report = quantum_ef_k2(bell_state(), budget);
  EXPECT_NEAR(report.best_value, oracle::kTwoLn2, 1e-6);
  EXPECT_EQ(report.bound_direction, BoundDirection::kUpperBoundOfMin);
}

TEST(QuantumEfK2Test, ProductStateCostsNothing) {
  const DensityMatrix joint =
      tensor(random_density_matrix(21, {Subsystem{"a", 2}}),
             random_density_matrix(22, {Subsystem{"b", 2}}));
  ExtensionBudget budget;
  const OptReport report = quantum_ef_k2(joint, budget);
  EXPECT_LE(report.best_value, 1e-6);
}

TEST(QuantumEfK2Test, ClassicallyCorrelatedMixtureCostsNothing) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = 0.5;
  m(3, 3) = 0.5;
  const DensityMatrix rho({Subsystem{"a", 2}, Subsystem{"b", 2}}, m);
  ExtensionBudget budget;
  budget.n_alpha = 2;
  const OptReport report = quantum_ef_k2(rho, budget);
  EXPECT_LE(report.best_value, 1e-6);
}

TEST(QuantumEfK2Test, WernerFamilyMatchesTheClosedFormReference) {
  for (const double p : {0.2, 0.5, 0.9}) {
    const DensityMatrix rho = werner_state(p);
    const double c = oracle::concurrence(rho.matrix());
    const double expect = 2.0 * oracle::formation_nats_from_concurrence(c);
    ExtensionBudget budget;
    const OptReport report = quantum_ef_k2(rho, budget);
    EXPECT_GE(report.best_value, expect - 1e-8);
    EXPECT_LE(report.best_value, expect + 1e-4);
  }
}

TEST(QuantumEfK2Test, RandomTwoQubitStatesMatchTheClosedFormReference) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const DensityMatrix rho = random_density_matrix(
        seed + 200, {Subsystem{"a", 2}, Subsystem{"b", 2}},
        2 + static_cast<int>(seed % 3));
    const double c = oracle::concurrence(rho.matrix());
    const double expect = 2.0 * oracle::formation_nats_from_concurrence(c);
    ExtensionBudget budget;
    budget.seed = seed;
    const OptReport report = quantum_ef_k2(rho, budget);
    EXPECT_GE(report.best_value, expect - 1e-8);
    EXPECT_LE(report.best_value, expect + 2e-3);
  }
}

TEST(QuantumEfK2Test, ReportedEnsembleReproducesStateAndValue) {
  const DensityMatrix rho = werner_state(0.8);
  ExtensionBudget budget;
  const OptReport report = quantum_ef_k2(rho, budget);

  const auto& w = report.best_params.at("weights");
  const auto& re = report.best_params.at("members_re");
  const auto& im = report.best_params.at("members_im");
  Eigen::MatrixXcd recon = Eigen::MatrixXcd::Zero(4, 4);
  for (std::size_t k = 0; k < w.size(); ++k) {
    Eigen::VectorXcd v(4);
    for (int i = 0; i < 4; ++i) {
      v[i] = std::complex<double>(re[k][i].get<double>(),
                                  im[k][i].get<double>());
    }
    recon += w[k].get<double>() * (v * v.adjoint());
  }
  EXPECT_LT((recon - rho.matrix()).cwiseAbs().maxCoeff(), 1e-9);
  EXPECT_NEAR(ensemble_objective(report), report.best_value, 1e-8);
}

TEST(QuantumEfK2Test, DeterministicPerSeedAndBudget) {
  const DensityMatrix rho = werner_state(0.6);
  ExtensionBudget budget;
  budget.seed = 5;
  budget.restarts = 3;
  budget.iterations = 800;
  const OptReport r1 = quantum_ef_k2(rho, budget);
  const OptReport r2 = quantum_ef_k2(rho, budget);
  EXPECT_EQ(r1.best_value, r2.best_value);
  EXPECT_EQ(r1.evaluations, r2.evaluations);
}

TEST(QuantumEfK1Test, SeparableMarginalsCostNothing) {
  for (std::uint64_t seed = 0; seed < 2; ++seed) {
    const DensityMatrix rho = random_separable(seed, 2, {0.4, 0.6});
    ExtensionBudget budget;
    budget.seed = seed;
    const OptReport report = quantum_ef_k1(rho, budget);
    EXPECT_LE(report.best_value, 1e-6);
  }
}

TEST(QuantumEfK1Test, PureStatesAdmitOnlyTheTrivialEnsemble) {
  const DensityMatrix rho = random_density_matrix(
      301, {Subsystem{"a", 2}, Subsystem{"b", 2}}, 1);
  const double expect =
      2.0 * oracle::vn_entropy(oracle::ptrace(rho.matrix(), {2, 2}, {0}));
  ExtensionBudget budget;
  budget.restarts = 4;
  const OptReport report = quantum_ef_k1(rho, budget);
  EXPECT_NEAR(report.best_value, expect, 1e-6);
}

TEST(QuantumEfK1Test, NeverExceedsThePureMemberCost) {
  const DensityMatrix rho = random_density_matrix(
      302, {Subsystem{"a", 2}, Subsystem{"b", 2}}, 2);
  ExtensionBudget budget;
  budget.restarts = 4;
  budget.iterations = 1000;
  const OptReport k1 = quantum_ef_k1(rho, budget);
  const OptReport k2 = quantum_ef_k2(rho, budget);
  EXPECT_LE(k1.best_value, k2.best_value + 1e-9);
}

TEST(QuantumEfK0Test, TrivialConditionerIsExactlyMutualInformation) {
  const DensityMatrix rho = random_density_matrix(
      311, {Subsystem{"a", 2}, Subsystem{"b", 2}}, 3);
  ExtensionBudget budget;
  const OptReport report = quantum_ef_k0_bounded(rho, 1, budget);
  EXPECT_EQ(report.best_value,
            quantum_mutual_information(rho, {"a"}, {"b"}));
  EXPECT_TRUE(report.converged);
}

TEST(QuantumEfK0Test, PureStatesKeepTheEntropySumAtAnyDimension) {
  const DensityMatrix rho = random_density_matrix(
      312, {Subsystem{"a", 2}, Subsystem{"b", 2}}, 1);
  const double expect = quantum_mutual_information(rho, {"a"}, {"b"});
  for (const int dim_lambda : {2, 3}) {
    ExtensionBudget budget;
    budget.restarts = 2;
    budget.iterations = 400;
    const OptReport report = quantum_ef_k0_bounded(rho, dim_lambda, budget);
    EXPECT_NEAR(report.best_value, expect, 1e-6);
  }
}

TEST(QuantumEfK0Test, FlaggedExtensionOfSeparableStatesIsReachable) {
  const DensityMatrix rho = random_separable(5, 2, {0.35, 0.65});
  ExtensionBudget budget;
  const OptReport report = quantum_ef_k0_bounded(rho, 2, budget);
  EXPECT_LE(report.best_value, 1e-6);
}

TEST(QuantumEfK0Test, RejectsNonPositiveDimension) {
  const DensityMatrix rho = random_density_matrix(
      313, {Subsystem{"a", 2}, Subsystem{"b", 2}});
  EXPECT_THROW(quantum_ef_k0_bounded(rho, 0, ExtensionBudget{}),
               ConfigError);
}

TEST(EfOrderingTest, LargerFamiliesNeverCostMore) {
  const DensityMatrix rho = random_density_matrix(
      12, {Subsystem{"a", 2}, Subsystem{"b", 2}}, 2);
  ExtensionBudget budget;
  budget.restarts = 4;
  budget.iterations = 1000;
  const OptReport k2 = quantum_ef_k2(rho, budget);
  const OptReport k1 = quantum_ef_k1(rho, budget);
  const OptReport k0 = quantum_ef_k0_bounded(rho, 4, budget);
  EXPECT_LE(k1.best_value, k2.best_value + 1e-9);
  EXPECT_LE(k0.best_value, k1.best_value + 1e-3);
}

}  // namespace
}  // namespace entcmi
