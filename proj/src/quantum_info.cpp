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
#include "entcmi/quantum_info.hpp"

#include <cmath>
#include <stdexcept>

#include "entcmi/errors.hpp"

namespace entcmi {

namespace {

constexpr double kEigenvalueFloor = 1e-12;

double clamp_small_negative(double value, double window, ClampDiag* diag) {
  if (value >= 0.0) return value;
  if (value < -window) {
    throw InvariantError(
        "information quantity negative beyond the numerical window");
  }
  if (diag != nullptr) {
    diag->clamped = true;
    diag->raw = value;
  }
  return 0.0;
}

std::vector<std::string> concat(const std::vector<std::string>& x,
                                const std::vector<std::string>& y) {
  std::vector<std::string> r = x;
  r.insert(r.end(), y.begin(), y.end());
  return r;
}

double entropy_of_group(const DensityMatrix& rho,
                        const std::vector<std::string>& subs) {
  if (subs.empty()) return 0.0;
  if (subs.size() == rho.subsystems().size()) {
    bool all = true;
    for (const std::string& name : subs) {
      if (!rho.has_subsystem(name)) {
        all = false;
        break;
      }
    }
    if (all) return von_neumann_entropy(rho);
  }
  return von_neumann_entropy(partial_trace(rho, subs));
}

}  // namespace

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho,
                                                     Eigen::EigenvaluesOnly);
  double h = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double v = es.eigenvalues()[i];
    if (v > kEigenvalueFloor) {
      h -= v * std::log(v);
    } else if (v < -DensityMatrix::kPsdTolerance) {
      throw InvariantError("negative eigenvalue in entropy computation");
    }
  }
  return h;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return von_neumann_entropy(rho.matrix());
}

double quantum_mutual_information(const DensityMatrix& rho,
                                  const std::vector<std::string>& a_subs,
                                  const std::vector<std::string>& b_subs,
                                  ClampDiag* diag) {
  if (a_subs.empty() || b_subs.empty()) {
    throw std::invalid_argument("mutual information needs non-empty groups");
  }
  const double h_a = entropy_of_group(rho, a_subs);
  const double h_b = entropy_of_group(rho, b_subs);
  const double h_ab = entropy_of_group(rho, concat(a_subs, b_subs));
  return clamp_small_negative(h_a + h_b - h_ab, kQuantumMiClampWindow, diag);
}

double quantum_cmi(const DensityMatrix& rho,
                   const std::vector<std::string>& a_subs,
                   const std::vector<std::string>& b_subs,
                   const std::vector<std::string>& c_subs, ClampDiag* diag) {
  if (a_subs.empty() || b_subs.empty()) {
    throw std::invalid_argument("mutual information needs non-empty groups");
  }
  if (c_subs.empty()) {
    return quantum_mutual_information(rho, a_subs, b_subs, diag);
  }
  const double h_ac = entropy_of_group(rho, concat(a_subs, c_subs));
  const double h_bc = entropy_of_group(rho, concat(b_subs, c_subs));
  const double h_c = entropy_of_group(rho, c_subs);
  const double h_abc =
      entropy_of_group(rho, concat(concat(a_subs, b_subs), c_subs));
  return clamp_small_negative(h_ac + h_bc - h_c - h_abc,
                              kQuantumCmiClampWindow, diag);
}

void validate_ensemble(const Ensemble& ensemble) {
  if (ensemble.weights.empty()) {
    throw std::invalid_argument("ensemble must be non-empty");
  }
  if (ensemble.states.size() != ensemble.weights.size() ||
      ensemble.pure.size() != ensemble.weights.size()) {
    throw InvariantError("ensemble field lengths disagree");
  }
  double mass = 0.0;
  for (double w : ensemble.weights) {
    if (!(w >= 0.0)) {
      throw InvariantError("ensemble weights must be non-negative");
    }
    mass += w;
  }
  if (std::abs(mass - 1.0) > 1e-12) {
    throw InvariantError("ensemble weights deviate from one beyond tolerance");
  }
  const auto& subs = ensemble.states[0].subsystems();
  for (const DensityMatrix& s : ensemble.states) {
    if (!(s.subsystems() == subs)) {
      throw InvariantError("ensemble members live on different subsystems");
    }
  }
}

namespace {

DensityMatrix flagged_mixture(const Ensemble& ensemble,
                              const std::string& flag_name) {
  validate_ensemble(ensemble);
  const int n = static_cast<int>(ensemble.weights.size());
  const int d = ensemble.states[0].dim();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d * n, d * n);
  for (int k = 0; k < n; ++k) {
    // Flag is the last subsystem, so member blocks interleave with stride n.
    const auto& m = ensemble.states[k].matrix();
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        out(i * n + k, j * n + k) = ensemble.weights[k] * m(i, j);
      }
    }
  }
  std::vector<Subsystem> subs = ensemble.states[0].subsystems();
  subs.push_back(Subsystem{flag_name, n});
  return DensityMatrix(std::move(subs), std::move(out));
}

}  // namespace

DensityMatrix build_separable(const std::vector<DensityMatrix>& states_a,
                              const std::vector<DensityMatrix>& states_b,
                              const std::vector<double>& weights,
                              const std::string& flag_name) {
  if (states_a.size() != weights.size() ||
      states_b.size() != weights.size()) {
    throw std::invalid_argument("one (a, b) state pair required per weight");
  }
  Ensemble ensemble;
  ensemble.weights = weights;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    ensemble.states.push_back(tensor(states_a[k], states_b[k]));
    ensemble.pure.push_back(false);
  }
  return flagged_mixture(ensemble, flag_name);
}

DensityMatrix build_k1_state(const Ensemble& ensemble,
                             const std::string& flag_name) {
  return flagged_mixture(ensemble, flag_name);
}

DensityMatrix build_k2_state(const Ensemble& ensemble,
                             const std::string& flag_name) {
  validate_ensemble(ensemble);
  for (std::size_t k = 0; k < ensemble.states.size(); ++k) {
    if (!ensemble.pure[k]) {
      throw InvariantError("pure-member extension given an unflagged member");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        ensemble.states[k].matrix(), Eigen::EigenvaluesOnly);
    if (es.eigenvalues().maxCoeff() < 1.0 - 1e-8) {
      throw InvariantError("pure-member extension given a mixed member");
    }
  }
  return flagged_mixture(ensemble, flag_name);
}

}  // namespace entcmi
