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

#include <cstddef>
#include <string>
#include <vector>

#include "entcmi/axis.hpp"
#include "entcmi/joint_pmf.hpp"

namespace entcmi {

/// Conditional probability table T(out | in) over named axes.
///
/// The table is stored flat with index `out_lin * n_in + in_lin`, where both
/// linear indices are row-major over the respective axis lists. Every column
/// (fixed input) must sum to one within 1e-12 and is renormalized on
/// construction.
class StochasticMap {
 public:
  StochasticMap(std::vector<Axis> in_axes, std::vector<Axis> out_axes,
                std::vector<double> table);

  const std::vector<Axis>& in_axes() const { return in_axes_; }
  const std::vector<Axis>& out_axes() const { return out_axes_; }
  std::size_t n_in() const { return n_in_; }
  std::size_t n_out() const { return n_out_; }
  double operator()(std::size_t out_lin, std::size_t in_lin) const {
    return table_[out_lin * n_in_ + in_lin];
  }
  const std::vector<double>& table() const { return table_; }

  /// Deterministic copy map: out value equals in value. Output axes reuse
  /// the input sizes under the given names.
  static StochasticMap identity(const std::vector<Axis>& in_axes,
                                const std::vector<std::string>& out_names);

 private:
  std::vector<Axis> in_axes_;
  std::vector<Axis> out_axes_;
  std::vector<double> table_;
  std::size_t n_in_ = 0;
  std::size_t n_out_ = 0;
};

/// Pushes `p` through `T`: the input axes of `T` (which must all be present
/// in `p` with matching sizes) are consumed, and the output carries
/// `T.out_axes` first followed by the untouched axes of `p` in their
/// original order.
JointPmf apply_stochastic_map(const StochasticMap& t, const JointPmf& p);

/// Like apply_stochastic_map but keeps the consumed input axes, producing
/// the joint law of (out, original). Output axes: `T.out_axes` then all of
/// `p.axes`.
JointPmf extend_with_map(const StochasticMap& t, const JointPmf& p);

}  // namespace entcmi
