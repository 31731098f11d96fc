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
#include "entcmi/info.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "entcmi/errors.hpp"

namespace entcmi {

namespace {

double entropy_of_table(const std::vector<double>& probs) {
  double h = 0.0;
  for (double v : probs) {
    if (v > 0.0) h -= v * std::log(v);
  }
  return h;
}

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

void require_disjoint(const std::vector<std::string>& a_axes,
                      const std::vector<std::string>& b_axes,
                      const std::vector<std::string>& c_axes) {
  std::unordered_set<std::string> seen;
  for (const auto* group : {&a_axes, &b_axes, &c_axes}) {
    for (const std::string& name : *group) {
      if (!seen.insert(name).second) {
        throw std::invalid_argument("axis '" + name +
                                    "' appears in more than one group");
      }
    }
  }
}

std::vector<std::string> concat(const std::vector<std::string>& x,
                                const std::vector<std::string>& y) {
  std::vector<std::string> r = x;
  r.insert(r.end(), y.begin(), y.end());
  return r;
}

}  // namespace

double entropy(const JointPmf& p, const std::vector<std::string>& axes) {
  if (axes.empty()) return 0.0;
  return entropy_of_table(marginalize(p, axes).probs());
}

double mutual_information(const JointPmf& p,
                          const std::vector<std::string>& a_axes,
                          const std::vector<std::string>& b_axes,
                          ClampDiag* diag) {
  return conditional_mutual_information(p, a_axes, b_axes, {}, diag);
}

double conditional_mutual_information(const JointPmf& p,
                                      const std::vector<std::string>& a_axes,
                                      const std::vector<std::string>& b_axes,
                                      const std::vector<std::string>& c_axes,
                                      ClampDiag* diag) {
  if (a_axes.empty() || b_axes.empty()) {
    throw std::invalid_argument("mutual information needs non-empty groups");
  }
  require_disjoint(a_axes, b_axes, c_axes);
  const double h_ac = entropy(p, concat(a_axes, c_axes));
  const double h_bc = entropy(p, concat(b_axes, c_axes));
  const double h_c = entropy(p, c_axes);
  const double h_abc = entropy(p, concat(concat(a_axes, b_axes), c_axes));
  const double value = h_ac + h_bc - h_c - h_abc;
  return clamp_small_negative(value, kClassicalClampWindow, diag);
}

double relative_entropy(const JointPmf& p, const JointPmf& q) {
  if (p.axes() != q.axes()) {
    throw std::invalid_argument(
        "relative entropy requires identical axis lists");
  }
  return relative_entropy_raw(p.probs(), q.probs());
}

double relative_entropy_raw(const std::vector<double>& p,
                            const std::vector<double>& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("relative entropy table size mismatch");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) {
      if (q[i] <= 0.0) return std::numeric_limits<double>::infinity();
      d += p[i] * std::log(p[i] / q[i]);
    }
  }
  ClampDiag diag;
  return clamp_small_negative(d, kClassicalClampWindow, &diag);
}

}  // namespace entcmi
