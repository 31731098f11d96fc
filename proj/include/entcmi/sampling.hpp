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
#include <random>
#include <vector>

#include "entcmi/axis.hpp"
#include "entcmi/joint_pmf.hpp"
#include "entcmi/stochastic_map.hpp"

namespace entcmi {

/// Deterministic random stream shared by every stochastic routine.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() { return unif_(eng_); }
  double normal() { return norm_(eng_); }
  double exponential() { return expo_(eng_); }
  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(eng_);
  }
  std::uint64_t next_seed() { return eng_(); }

 private:
  std::mt19937_64 eng_;
  std::uniform_real_distribution<double> unif_{0.0, 1.0};
  std::normal_distribution<double> norm_{0.0, 1.0};
  std::exponential_distribution<double> expo_{1.0};
};

/// Flat Dirichlet draw: n normalized unit exponentials.
std::vector<double> random_simplex(Rng& rng, int n);

JointPmf random_joint_pmf(Rng& rng, std::vector<Axis> axes);

/// Each column drawn independently from the flat Dirichlet.
StochasticMap random_stochastic_map(Rng& rng, std::vector<Axis> in_axes,
                                    std::vector<Axis> out_axes);

}  // namespace entcmi
