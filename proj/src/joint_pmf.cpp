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
#include "entcmi/joint_pmf.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "entcmi/errors.hpp"

namespace entcmi {

namespace {
constexpr double kMassTolerance = 1e-12;
}

JointPmf::JointPmf(std::vector<Axis> axes, std::vector<double> probs)
    : axes_(std::move(axes)), probs_(std::move(probs)) {
  if (axes_.empty()) {
    throw std::invalid_argument("pmf requires at least one axis");
  }
  validate_axes(axes_);
  if (probs_.size() != axis_volume(axes_)) {
    throw InvariantError("pmf table size does not match axis sizes");
  }
  double mass = 0.0;
  for (double v : probs_) {
    if (!(v >= 0.0)) {
      throw InvariantError("pmf entries must be non-negative");
    }
    mass += v;
  }
  if (std::abs(mass - 1.0) > kMassTolerance) {
    throw InvariantError("pmf mass deviates from one beyond tolerance");
  }
  for (double& v : probs_) v /= mass;
  strides_ = axis_strides(axes_);
}

int JointPmf::axis_index(std::string_view name) const {
  const int i = find_axis(axes_, name);
  if (i < 0) {
    throw std::invalid_argument("unknown axis '" + std::string(name) + "'");
  }
  return i;
}

bool JointPmf::has_axis(std::string_view name) const {
  return find_axis(axes_, name) >= 0;
}

JointPmf marginalize(const JointPmf& p, const std::vector<std::string>& keep) {
  std::vector<Axis> out_axes;
  std::vector<int> keep_pos;
  std::unordered_set<std::string> seen;
  out_axes.reserve(keep.size());
  for (const std::string& name : keep) {
    if (!seen.insert(name).second) {
      throw std::invalid_argument("duplicate axis '" + name +
                                  "' in keep list");
    }
    const int i = p.axis_index(name);
    keep_pos.push_back(i);
    out_axes.push_back(p.axes()[i]);
  }
  const auto out_strides = axis_strides(out_axes);
  std::vector<double> out(axis_volume(out_axes), 0.0);

  std::vector<int> idx(p.num_axes());
  for (std::size_t lin = 0; lin < p.size(); ++lin) {
    p.unflatten(lin, idx);
    std::size_t out_lin = 0;
    for (std::size_t k = 0; k < keep_pos.size(); ++k) {
      out_lin += static_cast<std::size_t>(idx[keep_pos[k]]) * out_strides[k];
    }
    out[out_lin] += p[lin];
  }
  if (out_axes.empty()) {
    // Marginalizing everything away leaves the trivial one-point law.
    return JointPmf({Axis{"unit", 1}}, {1.0});
  }
  return JointPmf(std::move(out_axes), std::move(out));
}

std::pair<JointPmf, double> condition(
    const JointPmf& p,
    const std::vector<std::pair<std::string, int>>& evidence) {
  if (evidence.empty()) {
    throw std::invalid_argument("conditioning requires at least one axis");
  }
  std::vector<int> fixed(p.num_axes(), -1);
  for (const auto& [name, value] : evidence) {
    const int i = p.axis_index(name);
    if (fixed[i] >= 0) {
      throw std::invalid_argument("axis '" + name + "' conditioned twice");
    }
    if (value < 0 || value >= p.axes()[i].size) {
      throw std::invalid_argument("evidence value out of range for axis '" +
                                  name + "'");
    }
    fixed[i] = value;
  }
  std::vector<Axis> out_axes;
  std::vector<int> free_pos;
  for (int i = 0; i < p.num_axes(); ++i) {
    if (fixed[i] < 0) {
      out_axes.push_back(p.axes()[i]);
      free_pos.push_back(i);
    }
  }
  if (out_axes.empty()) {
    out_axes.push_back(Axis{"unit", 1});
  }
  const auto out_strides = axis_strides(out_axes);
  std::vector<double> out(axis_volume(out_axes), 0.0);

  double event_mass = 0.0;
  std::vector<int> idx(p.num_axes());
  for (std::size_t lin = 0; lin < p.size(); ++lin) {
    p.unflatten(lin, idx);
    bool match = true;
    for (int i = 0; i < p.num_axes(); ++i) {
      if (fixed[i] >= 0 && idx[i] != fixed[i]) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    event_mass += p[lin];
    std::size_t out_lin = 0;
    for (std::size_t k = 0; k < free_pos.size(); ++k) {
      out_lin += static_cast<std::size_t>(idx[free_pos[k]]) * out_strides[k];
    }
    out[out_lin] += p[lin];
  }
  if (event_mass <= 0.0) {
    throw InfeasibleError("zero-probability conditioning event");
  }
  for (double& v : out) v /= event_mass;
  return {JointPmf(std::move(out_axes), std::move(out)), event_mass};
}

JointPmf product_pmf(const std::vector<JointPmf>& factors) {
  if (factors.empty()) {
    throw std::invalid_argument("product of zero pmfs is undefined");
  }
  std::vector<Axis> axes;
  for (const JointPmf& f : factors) {
    axes.insert(axes.end(), f.axes().begin(), f.axes().end());
  }
  validate_axes(axes);
  std::vector<double> out(axis_volume(axes), 1.0);
  // Each factor's linear index advances contiguously because factor axes
  // stay adjacent in the combined row-major order.
  std::size_t block = out.size();
  for (const JointPmf& f : factors) {
    const std::size_t n = f.size();
    block /= n;
    for (std::size_t lin = 0; lin < out.size(); ++lin) {
      out[lin] *= f[(lin / block) % n];
    }
  }
  return JointPmf(std::move(axes), std::move(out));
}

}  // namespace entcmi
