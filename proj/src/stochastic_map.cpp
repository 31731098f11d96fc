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
#include "entcmi/stochastic_map.hpp"

#include <cmath>
#include <stdexcept>

#include "entcmi/errors.hpp"

namespace entcmi {

namespace {
constexpr double kColumnTolerance = 1e-12;
}

StochasticMap::StochasticMap(std::vector<Axis> in_axes,
                             std::vector<Axis> out_axes,
                             std::vector<double> table)
    : in_axes_(std::move(in_axes)),
      out_axes_(std::move(out_axes)),
      table_(std::move(table)) {
  if (in_axes_.empty() || out_axes_.empty()) {
    throw std::invalid_argument("stochastic map requires in and out axes");
  }
  validate_axes(in_axes_);
  validate_axes(out_axes_);
  n_in_ = axis_volume(in_axes_);
  n_out_ = axis_volume(out_axes_);
  if (table_.size() != n_in_ * n_out_) {
    throw InvariantError("stochastic map table size mismatch");
  }
  for (std::size_t in = 0; in < n_in_; ++in) {
    double col = 0.0;
    for (std::size_t out = 0; out < n_out_; ++out) {
      const double v = table_[out * n_in_ + in];
      if (!(v >= 0.0)) {
        throw InvariantError("stochastic map entries must be non-negative");
      }
      col += v;
    }
    if (std::abs(col - 1.0) > kColumnTolerance) {
      throw InvariantError(
          "stochastic map column mass deviates from one beyond tolerance");
    }
    for (std::size_t out = 0; out < n_out_; ++out) {
      table_[out * n_in_ + in] /= col;
    }
  }
}

StochasticMap StochasticMap::identity(const std::vector<Axis>& in_axes,
                                      const std::vector<std::string>& out_names) {
  if (out_names.size() != in_axes.size()) {
    throw std::invalid_argument("identity map needs one out name per in axis");
  }
  std::vector<Axis> out_axes;
  for (std::size_t i = 0; i < in_axes.size(); ++i) {
    out_axes.push_back(Axis{out_names[i], in_axes[i].size});
  }
  const std::size_t n = axis_volume(in_axes);
  std::vector<double> table(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) table[i * n + i] = 1.0;
  return StochasticMap(in_axes, std::move(out_axes), std::move(table));
}

namespace {

struct MapPlan {
  std::vector<int> in_pos;        // position of each map input axis in p
  std::vector<Axis> rest_axes;    // axes of p not consumed by the map
  std::vector<int> rest_pos;      // their positions in p
};

MapPlan plan_application(const StochasticMap& t, const JointPmf& p) {
  MapPlan plan;
  std::vector<bool> consumed(p.num_axes(), false);
  for (const Axis& ax : t.in_axes()) {
    const int i = p.axis_index(ax.name);
    if (p.axes()[i].size != ax.size) {
      throw std::invalid_argument("axis '" + ax.name +
                                  "' size mismatch between map and pmf");
    }
    plan.in_pos.push_back(i);
    consumed[i] = true;
  }
  for (int i = 0; i < p.num_axes(); ++i) {
    if (!consumed[i]) {
      plan.rest_axes.push_back(p.axes()[i]);
      plan.rest_pos.push_back(i);
    }
  }
  return plan;
}

}  // namespace

JointPmf apply_stochastic_map(const StochasticMap& t, const JointPmf& p) {
  const MapPlan plan = plan_application(t, p);
  std::vector<Axis> out_axes = t.out_axes();
  out_axes.insert(out_axes.end(), plan.rest_axes.begin(),
                  plan.rest_axes.end());
  validate_axes(out_axes);

  const auto in_strides = axis_strides(t.in_axes());
  const auto rest_strides = axis_strides(plan.rest_axes);
  const std::size_t n_rest = axis_volume(plan.rest_axes);
  std::vector<double> out(t.n_out() * n_rest, 0.0);

  std::vector<int> idx(p.num_axes());
  for (std::size_t lin = 0; lin < p.size(); ++lin) {
    const double mass = p[lin];
    if (mass == 0.0) continue;
    p.unflatten(lin, idx);
    std::size_t in_lin = 0;
    for (std::size_t k = 0; k < plan.in_pos.size(); ++k) {
      in_lin += static_cast<std::size_t>(idx[plan.in_pos[k]]) * in_strides[k];
    }
    std::size_t rest_lin = 0;
    for (std::size_t k = 0; k < plan.rest_pos.size(); ++k) {
      rest_lin +=
          static_cast<std::size_t>(idx[plan.rest_pos[k]]) * rest_strides[k];
    }
    for (std::size_t o = 0; o < t.n_out(); ++o) {
      out[o * n_rest + rest_lin] += t(o, in_lin) * mass;
    }
  }
  return JointPmf(std::move(out_axes), std::move(out));
}

JointPmf extend_with_map(const StochasticMap& t, const JointPmf& p) {
  const MapPlan plan = plan_application(t, p);
  std::vector<Axis> out_axes = t.out_axes();
  out_axes.insert(out_axes.end(), p.axes().begin(), p.axes().end());
  validate_axes(out_axes);

  const auto in_strides = axis_strides(t.in_axes());
  std::vector<double> out(t.n_out() * p.size(), 0.0);

  std::vector<int> idx(p.num_axes());
  for (std::size_t lin = 0; lin < p.size(); ++lin) {
    const double mass = p[lin];
    if (mass == 0.0) continue;
    p.unflatten(lin, idx);
    std::size_t in_lin = 0;
    for (std::size_t k = 0; k < plan.in_pos.size(); ++k) {
      in_lin += static_cast<std::size_t>(idx[plan.in_pos[k]]) * in_strides[k];
    }
    for (std::size_t o = 0; o < t.n_out(); ++o) {
      out[o * p.size() + lin] += t(o, in_lin) * mass;
    }
  }
  return JointPmf(std::move(out_axes), std::move(out));
}

}  // namespace entcmi
