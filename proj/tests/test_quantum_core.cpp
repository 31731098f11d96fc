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
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "entcmi/density_matrix.hpp"
#include "entcmi/errors.hpp"
#include "entcmi/quantum_info.hpp"
#include "entcmi/unitary.hpp"
#include "support/oracles.hpp"

namespace entcmi {
namespace {

DensityMatrix bell_state() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
  return DensityMatrix({Subsystem{"a", 2}, Subsystem{"b", 2}}, m);
}

TEST(DensityMatrixTest, ConstructionEnforcesInvariants) {
  Eigen::Matrix2cd herm_broken;
  herm_broken << 0.5, std::complex<double>(0.0, 0.3), 0.0, 0.5;
  EXPECT_THROW(DensityMatrix({Subsystem{"a", 2}}, herm_broken),
               InvariantError);

  Eigen::Matrix2cd neg;
  neg << 1.2, 0.0, 0.0, -0.2;
  EXPECT_THROW(DensityMatrix({Subsystem{"a", 2}}, neg), InvariantError);

  Eigen::Matrix2cd off_trace;
  off_trace << 0.7, 0.0, 0.0, 0.7;
  EXPECT_THROW(DensityMatrix({Subsystem{"a", 2}}, off_trace),
               InvariantError);

  Eigen::Matrix2cd fine;
  fine << 0.25, 0.0, 0.0, 0.75;
  EXPECT_NO_THROW(DensityMatrix({Subsystem{"a", 2}}, fine));
  EXPECT_THROW(DensityMatrix({Subsystem{"a", 2}, Subsystem{"a", 2}},
                             Eigen::MatrixXcd::Identity(4, 4) / 4.0),
               std::invalid_argument);
}

TEST(PartialTraceTest, ProductStateRecoversTheFactor) {
  const DensityMatrix rho_a = random_density_matrix(1, {Subsystem{"a", 2}});
  const DensityMatrix rho_b = random_density_matrix(2, {Subsystem{"b", 3}});
  const DensityMatrix joint = tensor(rho_a, rho_b);
  const DensityMatrix back = partial_trace(joint, {"a"});
  EXPECT_LT((back.matrix() - rho_a.matrix()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(PartialTraceTest, BellMarginalIsMaximallyMixed) {
  const DensityMatrix rho_a = partial_trace(bell_state(), {"a"});
  EXPECT_LT(
      (rho_a.matrix() - Eigen::Matrix2cd::Identity() * 0.5).cwiseAbs()
          .maxCoeff(),
      1e-12);
}

TEST(PartialTraceTest, MatchesIndexContractionOracle) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DensityMatrix rho = random_density_matrix(
        seed, {Subsystem{"a", 2}, Subsystem{"b", 3}});
    const DensityMatrix kept = partial_trace(rho, {"b"});
    const Eigen::MatrixXcd expect =
        oracle::ptrace(rho.matrix(), {2, 3}, {1});
    EXPECT_LT((kept.matrix() - expect).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(kept.matrix().trace().real(), 1.0, 1e-12);
  }
}

TEST(PartialTraceTest, ReordersKeptSubsystems) {
  const DensityMatrix rho = random_density_matrix(
      5, {Subsystem{"a", 2}, Subsystem{"b", 2}, Subsystem{"c", 2}});
  const DensityMatrix kept = partial_trace(rho, {"c", "a"});
  const Eigen::MatrixXcd expect =
      oracle::ptrace(rho.matrix(), {2, 2, 2}, {2, 0});
  EXPECT_LT((kept.matrix() - expect).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_EQ(kept.subsystems()[0].name, "c");
  EXPECT_EQ(kept.subsystems()[1].name, "a");
  EXPECT_THROW(partial_trace(rho, {"zz"}), std::invalid_argument);
}

TEST(VonNeumannEntropyTest, AnchorsAndDiagonalReduction) {
  const DensityMatrix pure = random_density_matrix(3, {Subsystem{"a", 3}}, 1);
  EXPECT_NEAR(von_neumann_entropy(pure), 0.0, 1e-10);

  const DensityMatrix mixed(
      {Subsystem{"a", 2}}, Eigen::Matrix2cd::Identity() * 0.5);
  EXPECT_NEAR(von_neumann_entropy(mixed), oracle::kLn2, 1e-14);

  Eigen::Matrix2cd diag = Eigen::Matrix2cd::Zero();
  diag(0, 0) = 0.25;
  diag(1, 1) = 0.75;
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix({Subsystem{"a", 2}}, diag)),
              oracle::kEntropyQuarter, 1e-14);
}

TEST(VonNeumannEntropyTest, MatchesComplexEigensolverOracle) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DensityMatrix rho = random_density_matrix(
        seed + 100, {Subsystem{"a", 2}, Subsystem{"b", 2}});
    EXPECT_NEAR(von_neumann_entropy(rho), oracle::vn_entropy(rho.matrix()),
                1e-10);
  }
}

TEST(QuantumMiTest, ProductStateHasNoCorrelation) {
  const DensityMatrix joint =
      tensor(random_density_matrix(7, {Subsystem{"a", 2}}),
             random_density_matrix(8, {Subsystem{"b", 2}}));
  EXPECT_NEAR(quantum_mutual_information(joint, {"a"}, {"b"}), 0.0, 1e-10);
}

TEST(QuantumMiTest, BellStateReachesTwoLn2) {
  EXPECT_NEAR(quantum_mutual_information(bell_state(), {"a"}, {"b"}),
              oracle::kTwoLn2, 1e-12);
}

TEST(QuantumMiTest, MatchesPartialTraceEntropyOracle) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DensityMatrix rho = random_density_matrix(
        seed + 40, {Subsystem{"a", 2}, Subsystem{"b", 3}});
    const double expect =
        oracle::vn_entropy(oracle::ptrace(rho.matrix(), {2, 3}, {0})) +
        oracle::vn_entropy(oracle::ptrace(rho.matrix(), {2, 3}, {1})) -
        oracle::vn_entropy(rho.matrix());
    EXPECT_NEAR(quantum_mutual_information(rho, {"a"}, {"b"}), expect, 1e-9);
  }
}

TEST(QuantumCmiTest, TrivialConditionerReducesToMi) {
  const DensityMatrix rho = random_density_matrix(
      11, {Subsystem{"a", 2}, Subsystem{"b", 2}});
  EXPECT_NEAR(quantum_cmi(rho, {"a"}, {"b"}, {}),
              quantum_mutual_information(rho, {"a"}, {"b"}), 1e-12);
}

TEST(QuantumCmiTest, PureBipartiteStateGivesEntropySum) {
  const DensityMatrix rho = random_density_matrix(
      13, {Subsystem{"a", 2}, Subsystem{"b", 2}}, 1);
  const double expect =
      2.0 * oracle::vn_entropy(oracle::ptrace(rho.matrix(), {2, 2}, {0}));
  EXPECT_NEAR(quantum_cmi(rho, {"a"}, {"b"}, {}), expect, 1e-9);
}

TEST(QuantumCmiTest, MatchesFourEntropyOracleAndSubadditivity) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const DensityMatrix rho = random_density_matrix(
        seed + 60, {Subsystem{"a", 2}, Subsystem{"b", 2}, Subsystem{"c", 2}});
    const double value = quantum_cmi(rho, {"a"}, {"b"}, {"c"});
    EXPECT_NEAR(value,
                oracle::quantum_cmi(rho.matrix(), {2, 2, 2}, {0}, {1}, {2}),
                1e-9);
    EXPECT_GE(value, -1e-9);
  }
}

TEST(BuildSeparableTest, SingleMemberIsAProductWithAPointFlag) {
  const DensityMatrix rho_a = random_density_matrix(1, {Subsystem{"a", 2}});
  const DensityMatrix rho_b = random_density_matrix(2, {Subsystem{"b", 2}});
  const DensityMatrix out = build_separable({rho_a}, {rho_b}, {1.0});
  ASSERT_EQ(out.subsystems().size(), 3u);
  EXPECT_EQ(out.subsystems()[2].name, "alpha");
  EXPECT_EQ(out.subsystems()[2].dim, 1);
  const Eigen::MatrixXcd expect =
      oracle::kron(rho_a.matrix(), rho_b.matrix());
  EXPECT_LT((out.matrix() - expect).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(BuildSeparableTest, BlockStructureMatchesDirectConstruction) {
  oracle::TestRng trng(5);
  const int n_alpha = 3;
  std::vector<DensityMatrix> as, bs;
  std::vector<double> w = trng.simplex(n_alpha);
  for (int k = 0; k < n_alpha; ++k) {
    as.push_back(random_density_matrix(10 + k, {Subsystem{"a", 2}}));
    bs.push_back(random_density_matrix(20 + k, {Subsystem{"b", 2}}));
  }
  const DensityMatrix out = build_separable(as, bs, w);
  ASSERT_EQ(out.dim(), 12);
  // Flag is last, so entry ((i, k), (j, k)) sits at (i * 3 + k, j * 3 + k).
  for (int k = 0; k < n_alpha; ++k) {
    const Eigen::MatrixXcd block =
        oracle::kron(as[k].matrix(), bs[k].matrix()) * w[k];
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        EXPECT_NEAR(std::abs(out.matrix()(i * 3 + k, j * 3 + k) -
                             block(i, j)),
                    0.0, 1e-12);
        if (k > 0) {
          EXPECT_EQ(out.matrix()(i * 3 + k, j * 3 + k - 1),
                    std::complex<double>(0.0, 0.0));
        }
      }
    }
  }
}

TEST(BuildSeparableTest, FlaggedConstructionHasZeroConditionalCorrelation) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    oracle::TestRng trng(seed);
    const int n_alpha = 2 + static_cast<int>(seed % 3);
    std::vector<DensityMatrix> as, bs;
    const std::vector<double> w = trng.simplex(n_alpha);
    for (int k = 0; k < n_alpha; ++k) {
      as.push_back(random_density_matrix(seed * 31 + k, {Subsystem{"a", 2}}));
      bs.push_back(
          random_density_matrix(seed * 47 + k + 1, {Subsystem{"b", 2}}));
    }
    const DensityMatrix out = build_separable(as, bs, w);
    EXPECT_LE(quantum_cmi(out, {"a"}, {"b"}, {"alpha"}), 1e-10);
  }
}

TEST(BuildK1Test, MarginalIsTheWeightedMixture) {
  Ensemble ens;
  ens.weights = {0.25, 0.75};
  ens.states.push_back(random_density_matrix(
      31, {Subsystem{"a", 2}, Subsystem{"b", 2}}));
  ens.states.push_back(random_density_matrix(
      32, {Subsystem{"a", 2}, Subsystem{"b", 2}}));
  ens.pure = {false, false};
  const DensityMatrix out = build_k1_state(ens);
  const DensityMatrix marg = partial_trace(out, {"a", "b"});
  const Eigen::MatrixXcd expect =
      0.25 * ens.states[0].matrix() + 0.75 * ens.states[1].matrix();
  EXPECT_LT((marg.matrix() - expect).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(BuildK1Test, SingleBlockAppendsAPointFlag) {
  Ensemble ens;
  ens.weights = {1.0};
  ens.states.push_back(random_density_matrix(
      33, {Subsystem{"a", 2}, Subsystem{"b", 2}}));
  ens.pure = {false};
  const DensityMatrix out = build_k1_state(ens);
  EXPECT_LT((out.matrix() - ens.states[0].matrix()).cwiseAbs().maxCoeff(),
            1e-12);
}

TEST(BuildK2Test, AgreesWithK1OnPureMembersAndRejectsMixed) {
  Ensemble ens;
  ens.weights = {0.5, 0.5};
  ens.states.push_back(random_density_matrix(
      41, {Subsystem{"a", 2}, Subsystem{"b", 2}}, 1));
  ens.states.push_back(random_density_matrix(
      42, {Subsystem{"a", 2}, Subsystem{"b", 2}}, 1));
  ens.pure = {true, true};
  const DensityMatrix k2 = build_k2_state(ens);
  const DensityMatrix k1 = build_k1_state(ens);
  EXPECT_LT((k2.matrix() - k1.matrix()).cwiseAbs().maxCoeff(), 1e-14);

  Ensemble mixed = ens;
  mixed.states[1] = random_density_matrix(
      43, {Subsystem{"a", 2}, Subsystem{"b", 2}}, 2);
  EXPECT_THROW(build_k2_state(mixed), InvariantError);
  mixed.pure = {true, false};
  EXPECT_THROW(build_k2_state(mixed), InvariantError);
}

TEST(BlockDiagonalTest, ConditionalInformationIsTheWeightedBlockSum) {
  oracle::TestRng trng(9);
  const int n_alpha = 3;
  Ensemble ens;
  ens.weights = trng.simplex(n_alpha);
  for (int k = 0; k < n_alpha; ++k) {
    ens.states.push_back(random_density_matrix(
        50 + k, {Subsystem{"a", 2}, Subsystem{"b", 2}}, 2));
    ens.pure.push_back(false);
  }
  const DensityMatrix flagged = build_k1_state(ens);
  double expect = 0.0;
  for (int k = 0; k < n_alpha; ++k) {
    expect += ens.weights[k] *
              quantum_mutual_information(ens.states[k], {"a"}, {"b"});
  }
  EXPECT_NEAR(quantum_cmi(flagged, {"a"}, {"b"}, {"alpha"}), expect, 1e-9);
}

TEST(UnitaryTest, ZeroParamsGiveIdentity) {
  const Eigen::MatrixXcd u = params_to_unitary(UnitaryParams::identity(3));
  EXPECT_LT((u - Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff(),
            1e-14);
}

TEST(UnitaryTest, DiagonalGeneratorGivesPhases) {
  UnitaryParams p = UnitaryParams::identity(2);
  p.params[0] = 0.7;
  p.params[1] = -0.3;
  const Eigen::MatrixXcd u = params_to_unitary(p);
  EXPECT_NEAR(std::abs(u(0, 0) - std::exp(std::complex<double>(0, 0.7))),
              0.0, 1e-12);
  EXPECT_NEAR(std::abs(u(1, 1) - std::exp(std::complex<double>(0, -0.3))),
              0.0, 1e-12);
  EXPECT_NEAR(std::abs(u(0, 1)), 0.0, 1e-14);
}

TEST(UnitaryTest, RandomParamsStayUnitary) {
  oracle::TestRng trng(12);
  for (int trial = 0; trial < 20; ++trial) {
    UnitaryParams p = UnitaryParams::identity(4);
    for (double& v : p.params) v = 2.0 * trng.gauss();
    const Eigen::MatrixXcd u = params_to_unitary(p);
    EXPECT_LT((u.adjoint() * u - Eigen::MatrixXcd::Identity(4, 4))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-10);
  }
}

TEST(UnitaryTest, EntriesAreSmoothInParameters) {
  UnitaryParams p = UnitaryParams::identity(2);
  p.params = {0.3, -0.2, 0.5, 0.1};
  const double h = 1e-5;
  for (std::size_t k = 0; k < p.params.size(); ++k) {
    UnitaryParams plus = p, minus = p, twice = p;
    plus.params[k] += h;
    minus.params[k] -= h;
    twice.params[k] += 2.0 * h;
    const Eigen::MatrixXcd u0 = params_to_unitary(p);
    const Eigen::MatrixXcd up = params_to_unitary(plus);
    const Eigen::MatrixXcd um = params_to_unitary(minus);
    const Eigen::MatrixXcd u2 = params_to_unitary(twice);
    const Eigen::MatrixXcd central = (up - um) / (2.0 * h);
    const Eigen::MatrixXcd forward = (u2 - u0) / (2.0 * h);
    EXPECT_LT((central - forward).cwiseAbs().maxCoeff(), 1e-4);
  }
}

TEST(UnitaryTest, IsometryParamsGiveOrthonormalColumns) {
  oracle::TestRng trng(15);
  std::vector<double> params(2 * 4 * 2);
  for (double& v : params) v = trng.gauss();
  const Eigen::MatrixXcd iso = params_to_isometry(params.data(), 4, 2);
  EXPECT_LT((iso.adjoint() * iso - Eigen::MatrixXcd::Identity(2, 2))
                .cwiseAbs()
                .maxCoeff(),
            1e-12);

  std::vector<double> zeros(2 * 4 * 2, 0.0);
  const Eigen::MatrixXcd fallback = params_to_isometry(zeros.data(), 4, 2);
  EXPECT_LT((fallback.adjoint() * fallback -
             Eigen::MatrixXcd::Identity(2, 2))
                .cwiseAbs()
                .maxCoeff(),
            1e-12);
}

TEST(RandomDensityMatrixTest, RankAndDeterminismContracts) {
  const DensityMatrix pure =
      random_density_matrix(3, {Subsystem{"a", 2}, Subsystem{"b", 2}}, 1);
  EXPECT_NEAR(von_neumann_entropy(pure), 0.0, 1e-10);

  const DensityMatrix full = random_density_matrix(4, {Subsystem{"a", 2}});
  const double h = von_neumann_entropy(full);
  EXPECT_GT(h, 0.0);
  EXPECT_LE(h, oracle::kLn2 + 1e-12);

  const DensityMatrix again = random_density_matrix(4, {Subsystem{"a", 2}});
  EXPECT_EQ((full.matrix() - again.matrix()).cwiseAbs().maxCoeff(), 0.0);
}

}  // namespace
}  // namespace entcmi
