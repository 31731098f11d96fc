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
#include "entcmi/axis.hpp"

#include <stdexcept>
#include <unordered_set>

namespace entcmi {

std::vector<std::size_t> axis_strides(const std::vector<Axis>& axes) {
  std::vector<std::size_t> strides(axes.size(), 1);
  for (int i = static_cast<int>(axes.size()) - 2; i >= 0; --i) {
    strides[i] = strides[i + 1] * static_cast<std::size_t>(axes[i + 1].size);
  }
  return strides;
}

std::size_t axis_volume(const std::vector<Axis>& axes) {
  std::size_t n = 1;
  for (const Axis& ax : axes) n *= static_cast<std::size_t>(ax.size);
  return n;
}

int find_axis(const std::vector<Axis>& axes, std::string_view name) {
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (axes[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

void validate_axes(const std::vector<Axis>& axes) {
  std::unordered_set<std::string> seen;
  for (const Axis& ax : axes) {
    if (ax.name.empty()) {
      throw std::invalid_argument("axis name must be non-empty");
    }
    if (ax.size <= 0) {
      throw std::invalid_argument("axis '" + ax.name +
                                  "' must have positive size");
    }
    if (!seen.insert(ax.name).second) {
      throw std::invalid_argument("duplicate axis name '" + ax.name + "'");
    }
  }
}

std::size_t flatten_index(std::span<const int> idx,
                          std::span<const std::size_t> strides) {
  std::size_t lin = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    lin += static_cast<std::size_t>(idx[i]) * strides[i];
  }
  return lin;
}

void unflatten_index(std::size_t lin, const std::vector<Axis>& axes,
                     std::span<int> out) {
  for (int i = static_cast<int>(axes.size()) - 1; i >= 0; --i) {
    const auto sz = static_cast<std::size_t>(axes[i].size);
    out[i] = static_cast<int>(lin % sz);
    lin /= sz;
  }
}

}  // namespace entcmi
