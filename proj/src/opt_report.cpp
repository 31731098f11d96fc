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
#include "entcmi/opt_report.hpp"

#include "entcmi/errors.hpp"

namespace entcmi {

void validate_budget(const ExtensionBudget& budget) {
  if (budget.n_alpha < 0) {
    throw ConfigError("family size must be positive (or zero for default)");
  }
  if (budget.restarts <= 0) {
    throw ConfigError("restart count must be positive");
  }
  if (budget.iterations <= 0) {
    throw ConfigError("iteration count must be positive");
  }
  if (!(budget.tolerance > 0.0)) {
    throw ConfigError("tolerance must be positive");
  }
  if (budget.env_dim < 0) {
    throw ConfigError("environment dimension must be positive (or zero for "
                      "default)");
  }
}

std::string to_string(BoundDirection d) {
  switch (d) {
    case BoundDirection::kUpperBoundOfMin:
      return "upper-bound-of-min";
    case BoundDirection::kLowerBoundOfMax:
      return "lower-bound-of-max";
    case BoundDirection::kHeuristic:
      return "heuristic";
  }
  return "unknown";
}

}  // namespace entcmi
