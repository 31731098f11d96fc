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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "entcmi/axis.hpp"

namespace entcmi {

/// Joint probability mass function over named discrete axes, stored flat in
/// row-major order with the last axis varying fastest.
///
/// Construction enforces: non-empty axis list with unique names and positive
/// sizes, entries >= 0, and total mass within 1e-12 of one (the stored table
/// is renormalized to sum exactly to the accumulated mass).
class JointPmf {
 public:
  JointPmf(std::vector<Axis> axes, std::vector<double> probs);

  const std::vector<Axis>& axes() const { return axes_; }
  const std::vector<double>& probs() const { return probs_; }
  int num_axes() const { return static_cast<int>(axes_.size()); }
  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t lin) const { return probs_[lin]; }

  /// Index of the named axis; throws std::invalid_argument if absent.
  int axis_index(std::string_view name) const;
  bool has_axis(std::string_view name) const;

  std::size_t flatten(std::span<const int> idx) const {
    return flatten_index(idx, strides_);
  }
  void unflatten(std::size_t lin, std::span<int> out) const {
    unflatten_index(lin, axes_, out);
  }
  const std::vector<std::size_t>& strides() const { return strides_; }

 private:
  std::vector<Axis> axes_;
  std::vector<double> probs_;
  std::vector<std::size_t> strides_;
};

/// Sums out every axis not listed in `keep`. The result carries the kept
/// axes in the order given by `keep`; with `keep` equal to the original axis
/// names in their original order this is the identity.
JointPmf marginalize(const JointPmf& p, const std::vector<std::string>& keep);

/// Conditions on `evidence` (axis name, outcome value) pairs. Returns the
/// conditional pmf over the remaining axes together with the probability of
/// the evidence event. Throws InfeasibleError on a zero-probability event.
std::pair<JointPmf, double> condition(
    const JointPmf& p,
    const std::vector<std::pair<std::string, int>>& evidence);

/// Independent product of the factors; axis names must be disjoint.
JointPmf product_pmf(const std::vector<JointPmf>& factors);

}  // namespace entcmi
