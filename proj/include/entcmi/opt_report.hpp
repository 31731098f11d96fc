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

#include <json.hpp>

namespace entcmi {

/// Search budget for the variational solvers.
struct ExtensionBudget {
  int n_alpha = 0;        // extension family size; 0 selects a solver default
  int restarts = 8;       // random starts beyond the built-in seed points
  int iterations = 2000;  // simplex iterations per start
  std::uint64_t seed = 0;
  double tolerance = 1e-9;  // early-exit slack above a known lower bound
  int env_dim = 0;  // channel environment dimension; 0 selects the state rank
};

/// Throws ConfigError on non-positive restart/iteration counts or a
/// non-positive tolerance.
void validate_budget(const ExtensionBudget& budget);

enum class BoundDirection {
  kUpperBoundOfMin,  // minimization: reported value upper-bounds the true min
  kLowerBoundOfMax,  // certified enumeration below a true max
  kHeuristic,        // max of upper bounds: no one-sided guarantee
};

std::string to_string(BoundDirection d);

struct OptReport {
  double best_value = 0.0;
  BoundDirection bound_direction = BoundDirection::kUpperBoundOfMin;
  nlohmann::json best_params;
  std::uint64_t seed = 0;
  long long evaluations = 0;
  bool converged = false;
};

}  // namespace entcmi
