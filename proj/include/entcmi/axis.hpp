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
#include <string_view>
#include <vector>

namespace entcmi {

/// One named discrete random variable.
struct Axis {
  std::string name;
  int size = 0;

  friend bool operator==(const Axis& x, const Axis& y) {
    return x.name == y.name && x.size == y.size;
  }
};

/// Row-major strides (last axis fastest) for a list of axes.
std::vector<std::size_t> axis_strides(const std::vector<Axis>& axes);

/// Total number of joint outcomes; 1 for an empty axis list.
std::size_t axis_volume(const std::vector<Axis>& axes);

/// Position of `name` in `axes`, or -1 if absent.
int find_axis(const std::vector<Axis>& axes, std::string_view name);

/// Throws std::invalid_argument on duplicates or non-positive sizes.
void validate_axes(const std::vector<Axis>& axes);

std::size_t flatten_index(std::span<const int> idx,
                          std::span<const std::size_t> strides);

void unflatten_index(std::size_t lin, const std::vector<Axis>& axes,
                     std::span<int> out);

}  // namespace entcmi
