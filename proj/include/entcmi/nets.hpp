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

#include <cstdint>
#include <optional>
#include <string>

#include "entcmi/joint_pmf.hpp"
#include "entcmi/sampling.hpp"
#include "entcmi/stochastic_map.hpp"

namespace entcmi {

/// Common-cause net (README Figure 1): a and b are conditionally independent
/// given the hidden cause alpha,
///   P(a, b, alpha) = P(a | alpha) P(b | alpha) P(alpha).
struct Fig1Spec {
  JointPmf p_alpha;               // one axis: the hidden cause
  StochasticMap p_a_given_alpha;  // in {alpha}, out {a}
  StochasticMap p_b_given_alpha;  // in {alpha}, out {b}

  const std::string& alpha_name() const { return p_alpha.axes()[0].name; }
  const std::string& a_name() const {
    return p_a_given_alpha.out_axes()[0].name;
  }
  const std::string& b_name() const {
    return p_b_given_alpha.out_axes()[0].name;
  }
};

/// Throws std::invalid_argument if the maps do not wire single axes onto the
/// cause axis or the three outcome names collide.
void validate_fig1(const Fig1Spec& spec);

/// Joint law over (a, b, alpha) in that axis order.
JointPmf build_fig1(const Fig1Spec& spec);

Fig1Spec random_fig1(std::uint64_t seed, int n_a, int n_b, int n_alpha);
Fig1Spec random_fig1(Rng& rng, int n_a, int n_b, int n_alpha,
                     const std::string& a_name = "a",
                     const std::string& b_name = "b",
                     const std::string& alpha_name = "alpha");

/// Two-pair processing net (README Figure 2). Two independent common-cause
/// sources emit (A, B, alpha) and (Ap, Bp, alphap); a local map u turns
/// (A, Ap) into (a, ap) and a local map v turns (B, Bp) into (b, bp). With
/// comm_arrow set, v may additionally read (a, ap). Axis names are fixed to
/// exactly these so that downstream post-selection is unambiguous.
struct Fig2Spec {
  Fig1Spec x;   // axes A, B, alpha
  Fig1Spec xp;  // axes Ap, Bp, alphap
  StochasticMap u;  // in (A, Ap), out (a, ap), sizes preserved pairwise
  StochasticMap v;  // in (B, Bp) or (B, Bp, a, ap), out (b, bp)
  bool comm_arrow = false;

  int n_a() const { return u.out_axes()[0].size; }
  int n_b() const { return v.out_axes()[0].size; }
};

void validate_fig2(const Fig2Spec& spec);

/// Joint law over (a, b, ap, bp, alpha, alphap), or over
/// (a, b, ap, bp, A, B, Ap, Bp, alpha, alphap) when keep_ancestors is set.
JointPmf build_fig2(const Fig2Spec& spec, bool keep_ancestors = false);

/// Both sources share the cardinalities (n_a, n_b, n_alpha); u and v are
/// drawn column-wise from the flat Dirichlet.
Fig2Spec random_fig2(std::uint64_t seed, int n_a, int n_b, int n_alpha,
                     bool comm_arrow = false);
Fig2Spec random_fig2(Rng& rng, int n_a, int n_b, int n_alpha,
                     bool comm_arrow = false);

/// Hidden-variable net (README Figure 3):
///   P(a, b, x, y, lambda)
///     = P(a | x) P(b | y) P(x | lambda) P(y | lambda) P(lambda).
struct Fig3Spec {
  JointPmf p_lambda;             // one axis: lambda
  StochasticMap p_x_given_lambda;  // in {lambda}, out {x}
  StochasticMap p_y_given_lambda;  // in {lambda}, out {y}
  StochasticMap p_a_given_x;       // in {x}, out {a}
  StochasticMap p_b_given_y;       // in {y}, out {b}
};

void validate_fig3(const Fig3Spec& spec);

/// Joint law over (a, b, x, y, lambda) in that axis order.
JointPmf build_fig3(const Fig3Spec& spec);

struct Fig3Cards {
  int n_a = 2;
  int n_b = 2;
  int n_x = 2;
  int n_y = 2;
  int n_lambda = 2;
};

Fig3Spec random_fig3(std::uint64_t seed, const Fig3Cards& cards);
Fig3Spec random_fig3(Rng& rng, const Fig3Cards& cards);

}  // namespace entcmi
