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

#include <string>
#include <vector>

#include "entcmi/joint_pmf.hpp"
#include "entcmi/stochastic_map.hpp"

namespace entcmi {

/// All information quantities are in nats.
inline constexpr double kNatsPerBit = 0.6931471805599453;

/// Negative results within this window of zero are clamped to zero;
/// anything more negative raises InvariantError.
inline constexpr double kClassicalClampWindow = 1e-12;

/// Set when a derived information quantity came out slightly negative and
/// was clamped to zero.
struct ClampDiag {
  bool clamped = false;
  double raw = 0.0;
};

/// Shannon entropy H of the marginal on `axes` (empty list gives 0).
double entropy(const JointPmf& p, const std::vector<std::string>& axes);

/// Mutual information H(A) + H(B) - H(AB) of two disjoint axis groups.
double mutual_information(const JointPmf& p,
                          const std::vector<std::string>& a_axes,
                          const std::vector<std::string>& b_axes,
                          ClampDiag* diag = nullptr);

/// Conditional mutual information H(AC) + H(BC) - H(C) - H(ABC).
/// An empty conditioning group reduces this to mutual information.
double conditional_mutual_information(const JointPmf& p,
                                      const std::vector<std::string>& a_axes,
                                      const std::vector<std::string>& b_axes,
                                      const std::vector<std::string>& c_axes,
                                      ClampDiag* diag = nullptr);

/// Relative entropy D(P || Q) for pmfs over identical axis lists. Returns
/// +infinity when the support of P is not contained in the support of Q.
double relative_entropy(const JointPmf& p, const JointPmf& q);

/// Relative entropy on raw tables of equal length (both assumed normalized).
double relative_entropy_raw(const std::vector<double>& p,
                            const std::vector<double>& q);

}  // namespace entcmi
