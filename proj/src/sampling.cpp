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
#include "entcmi/sampling.hpp"

namespace entcmi {

std::vector<double> random_simplex(Rng& rng, int n) {
  std::vector<double> w(static_cast<std::size_t>(n));
  double total = 0.0;
  for (double& v : w) {
    v = rng.exponential();
    total += v;
  }
  for (double& v : w) v /= total;
  return w;
}

JointPmf random_joint_pmf(Rng& rng, std::vector<Axis> axes) {
  const int n = static_cast<int>(axis_volume(axes));
  return JointPmf(std::move(axes), random_simplex(rng, n));
}

StochasticMap random_stochastic_map(Rng& rng, std::vector<Axis> in_axes,
                                    std::vector<Axis> out_axes) {
  const std::size_t n_in = axis_volume(in_axes);
  const std::size_t n_out = axis_volume(out_axes);
  std::vector<double> table(n_in * n_out);
  for (std::size_t in = 0; in < n_in; ++in) {
    const auto col = random_simplex(rng, static_cast<int>(n_out));
    for (std::size_t out = 0; out < n_out; ++out) {
      table[out * n_in + in] = col[out];
    }
  }
  return StochasticMap(std::move(in_axes), std::move(out_axes),
                       std::move(table));
}

}  // namespace entcmi
