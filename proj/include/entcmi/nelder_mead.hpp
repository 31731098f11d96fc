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
#include <functional>
#include <limits>
#include <vector>

namespace entcmi::opt {

using Objective = std::function<double(const Eigen::VectorXd&)>;

struct SimplexOptions {
  int max_iters = 2000;
  double f_tol = 1e-13;
  double init_step = 0.4;
};

struct SimplexResult {
  Eigen::VectorXd x;
  double f = std::numeric_limits<double>::infinity();
  long long evals = 0;
};

/// Downhill simplex with dimension-adaptive coefficients. Deterministic for
/// a fixed starting point.
SimplexResult simplex_minimize(const Objective& f, const Eigen::VectorXd& x0,
                               const SimplexOptions& options);

struct MultiStartOptions {
  int restarts = 8;          // random starts beyond the provided seeds
  int iters_per_start = 2000;
  int polish_rounds = 6;     // extra runs from the incumbent, shrinking step
  int hop_rounds = 4;        // perturbed-incumbent basin hops
  double init_step = 0.4;
  double start_sigma = 1.0;  // scale of random starting points
  double hop_sigma = 0.25;   // scale of basin-hop perturbations
  double f_tol = 1e-13;
  // Stop as soon as the best value reaches this bound plus stop_tol.
  double known_lower_bound = -std::numeric_limits<double>::infinity();
  double stop_tol = 1e-10;
  std::uint64_t seed = 0;
};

struct MultiStartResult {
  Eigen::VectorXd x;
  double f = std::numeric_limits<double>::infinity();
  long long evals = 0;
  bool reached_bound = false;
};

/// Runs the simplex from each provided seed point, then from random
/// Gaussian points, keeps the incumbent, and finishes with shrinking-step
/// polish runs and perturbed-incumbent hops. Fully deterministic in
/// (seeds, options.seed).
MultiStartResult multistart_minimize(const Objective& f, int dim,
                                     const std::vector<Eigen::VectorXd>& seeds,
                                     const MultiStartOptions& options);

}  // namespace entcmi::opt
