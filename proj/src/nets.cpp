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
#include "entcmi/nets.hpp"

#include <stdexcept>

namespace entcmi {

namespace {

void require_single_in(const StochasticMap& m, const std::string& cause,
                       const char* label) {
  if (m.in_axes().size() != 1 || m.out_axes().size() != 1) {
    throw std::invalid_argument(std::string(label) +
                                " must map one axis to one axis");
  }
  if (m.in_axes()[0].name != cause) {
    throw std::invalid_argument(std::string(label) +
                                " must be conditioned on '" + cause + "'");
  }
}

}  // namespace

void validate_fig1(const Fig1Spec& spec) {
  if (spec.p_alpha.num_axes() != 1) {
    throw std::invalid_argument("cause pmf must have exactly one axis");
  }
  require_single_in(spec.p_a_given_alpha, spec.alpha_name(), "p_a_given_alpha");
  require_single_in(spec.p_b_given_alpha, spec.alpha_name(), "p_b_given_alpha");
  if (spec.p_a_given_alpha.in_axes()[0].size != spec.p_alpha.axes()[0].size ||
      spec.p_b_given_alpha.in_axes()[0].size != spec.p_alpha.axes()[0].size) {
    throw std::invalid_argument("cause cardinality mismatch");
  }
  std::vector<Axis> names{spec.p_a_given_alpha.out_axes()[0],
                          spec.p_b_given_alpha.out_axes()[0],
                          spec.p_alpha.axes()[0]};
  validate_axes(names);
}

JointPmf build_fig1(const Fig1Spec& spec) {
  validate_fig1(spec);
  JointPmf j = extend_with_map(spec.p_a_given_alpha, spec.p_alpha);
  j = extend_with_map(spec.p_b_given_alpha, j);
  return marginalize(j, {spec.a_name(), spec.b_name(), spec.alpha_name()});
}

Fig1Spec random_fig1(std::uint64_t seed, int n_a, int n_b, int n_alpha) {
  Rng rng(seed);
  return random_fig1(rng, n_a, n_b, n_alpha);
}

Fig1Spec random_fig1(Rng& rng, int n_a, int n_b, int n_alpha,
                     const std::string& a_name, const std::string& b_name,
                     const std::string& alpha_name) {
  const Axis alpha{alpha_name, n_alpha};
  return Fig1Spec{
      random_joint_pmf(rng, {alpha}),
      random_stochastic_map(rng, {alpha}, {Axis{a_name, n_a}}),
      random_stochastic_map(rng, {alpha}, {Axis{b_name, n_b}}),
  };
}

void validate_fig2(const Fig2Spec& spec) {
  validate_fig1(spec.x);
  validate_fig1(spec.xp);
  const char* expected[][3] = {{"A", "B", "alpha"}, {"Ap", "Bp", "alphap"}};
  const Fig1Spec* parts[] = {&spec.x, &spec.xp};
  for (int i = 0; i < 2; ++i) {
    if (parts[i]->a_name() != expected[i][0] ||
        parts[i]->b_name() != expected[i][1] ||
        parts[i]->alpha_name() != expected[i][2]) {
      throw std::invalid_argument(
          "two-pair net requires source axes (A, B, alpha) and "
          "(Ap, Bp, alphap)");
    }
  }
  const int n_A = spec.x.p_a_given_alpha.out_axes()[0].size;
  const int n_B = spec.x.p_b_given_alpha.out_axes()[0].size;
  const int n_Ap = spec.xp.p_a_given_alpha.out_axes()[0].size;
  const int n_Bp = spec.xp.p_b_given_alpha.out_axes()[0].size;

  if (spec.u.in_axes().size() != 2 || spec.u.out_axes().size() != 2) {
    throw std::invalid_argument("u must map (A, Ap) to (a, ap)");
  }
  if (spec.u.in_axes()[0].name != "A" || spec.u.in_axes()[1].name != "Ap" ||
      spec.u.out_axes()[0].name != "a" || spec.u.out_axes()[1].name != "ap") {
    throw std::invalid_argument("u must map (A, Ap) to (a, ap)");
  }
  if (spec.u.in_axes()[0].size != n_A || spec.u.in_axes()[1].size != n_Ap ||
      spec.u.out_axes()[0].size != n_A || spec.u.out_axes()[1].size != n_Ap) {
    throw std::invalid_argument("u must preserve cardinalities pairwise");
  }

  const std::size_t v_ins = spec.comm_arrow ? 4 : 2;
  if (spec.v.in_axes().size() != v_ins || spec.v.out_axes().size() != 2) {
    throw std::invalid_argument(
        spec.comm_arrow ? "v must map (B, Bp, a, ap) to (b, bp)"
                        : "v must map (B, Bp) to (b, bp)");
  }
  if (spec.v.in_axes()[0].name != "B" || spec.v.in_axes()[1].name != "Bp" ||
      spec.v.out_axes()[0].name != "b" || spec.v.out_axes()[1].name != "bp") {
    throw std::invalid_argument("v must map (B, Bp, ...) to (b, bp)");
  }
  if (spec.comm_arrow && (spec.v.in_axes()[2].name != "a" ||
                          spec.v.in_axes()[3].name != "ap" ||
                          spec.v.in_axes()[2].size != n_A ||
                          spec.v.in_axes()[3].size != n_Ap)) {
    throw std::invalid_argument("v communication inputs must be (a, ap)");
  }
  if (spec.v.in_axes()[0].size != n_B || spec.v.in_axes()[1].size != n_Bp ||
      spec.v.out_axes()[0].size != n_B || spec.v.out_axes()[1].size != n_Bp) {
    throw std::invalid_argument("v must preserve cardinalities pairwise");
  }
}

JointPmf build_fig2(const Fig2Spec& spec, bool keep_ancestors) {
  validate_fig2(spec);
  JointPmf j = product_pmf({build_fig1(spec.x), build_fig1(spec.xp)});
  j = extend_with_map(spec.u, j);
  j = extend_with_map(spec.v, j);
  if (keep_ancestors) {
    return marginalize(j, {"a", "b", "ap", "bp", "A", "B", "Ap", "Bp", "alpha",
                           "alphap"});
  }
  return marginalize(j, {"a", "b", "ap", "bp", "alpha", "alphap"});
}

Fig2Spec random_fig2(std::uint64_t seed, int n_a, int n_b, int n_alpha,
                     bool comm_arrow) {
  Rng rng(seed);
  return random_fig2(rng, n_a, n_b, n_alpha, comm_arrow);
}

Fig2Spec random_fig2(Rng& rng, int n_a, int n_b, int n_alpha,
                     bool comm_arrow) {
  Fig1Spec x = random_fig1(rng, n_a, n_b, n_alpha, "A", "B", "alpha");
  Fig1Spec xp = random_fig1(rng, n_a, n_b, n_alpha, "Ap", "Bp", "alphap");
  StochasticMap u = random_stochastic_map(
      rng, {Axis{"A", n_a}, Axis{"Ap", n_a}}, {Axis{"a", n_a}, Axis{"ap", n_a}});
  std::vector<Axis> v_in{Axis{"B", n_b}, Axis{"Bp", n_b}};
  if (comm_arrow) {
    v_in.push_back(Axis{"a", n_a});
    v_in.push_back(Axis{"ap", n_a});
  }
  StochasticMap v = random_stochastic_map(
      rng, std::move(v_in), {Axis{"b", n_b}, Axis{"bp", n_b}});
  return Fig2Spec{std::move(x), std::move(xp), std::move(u), std::move(v),
                  comm_arrow};
}

void validate_fig3(const Fig3Spec& spec) {
  if (spec.p_lambda.num_axes() != 1) {
    throw std::invalid_argument("lambda pmf must have exactly one axis");
  }
  const std::string& lambda = spec.p_lambda.axes()[0].name;
  require_single_in(spec.p_x_given_lambda, lambda, "p_x_given_lambda");
  require_single_in(spec.p_y_given_lambda, lambda, "p_y_given_lambda");
  require_single_in(spec.p_a_given_x, spec.p_x_given_lambda.out_axes()[0].name,
                    "p_a_given_x");
  require_single_in(spec.p_b_given_y, spec.p_y_given_lambda.out_axes()[0].name,
                    "p_b_given_y");
  if (spec.p_x_given_lambda.in_axes()[0].size !=
          spec.p_lambda.axes()[0].size ||
      spec.p_y_given_lambda.in_axes()[0].size !=
          spec.p_lambda.axes()[0].size ||
      spec.p_a_given_x.in_axes()[0].size !=
          spec.p_x_given_lambda.out_axes()[0].size ||
      spec.p_b_given_y.in_axes()[0].size !=
          spec.p_y_given_lambda.out_axes()[0].size) {
    throw std::invalid_argument("hidden-variable net cardinality mismatch");
  }
  std::vector<Axis> names{spec.p_a_given_x.out_axes()[0],
                          spec.p_b_given_y.out_axes()[0],
                          spec.p_x_given_lambda.out_axes()[0],
                          spec.p_y_given_lambda.out_axes()[0],
                          spec.p_lambda.axes()[0]};
  validate_axes(names);
}

JointPmf build_fig3(const Fig3Spec& spec) {
  validate_fig3(spec);
  JointPmf j = extend_with_map(spec.p_x_given_lambda, spec.p_lambda);
  j = extend_with_map(spec.p_y_given_lambda, j);
  j = extend_with_map(spec.p_a_given_x, j);
  j = extend_with_map(spec.p_b_given_y, j);
  return marginalize(j, {spec.p_a_given_x.out_axes()[0].name,
                         spec.p_b_given_y.out_axes()[0].name,
                         spec.p_x_given_lambda.out_axes()[0].name,
                         spec.p_y_given_lambda.out_axes()[0].name,
                         spec.p_lambda.axes()[0].name});
}

Fig3Spec random_fig3(std::uint64_t seed, const Fig3Cards& cards) {
  Rng rng(seed);
  return random_fig3(rng, cards);
}

Fig3Spec random_fig3(Rng& rng, const Fig3Cards& cards) {
  const Axis lambda{"lambda", cards.n_lambda};
  const Axis x{"x", cards.n_x};
  const Axis y{"y", cards.n_y};
  return Fig3Spec{
      random_joint_pmf(rng, {lambda}),
      random_stochastic_map(rng, {lambda}, {x}),
      random_stochastic_map(rng, {lambda}, {y}),
      random_stochastic_map(rng, {x}, {Axis{"a", cards.n_a}}),
      random_stochastic_map(rng, {y}, {Axis{"b", cards.n_b}}),
  };
}

}  // namespace entcmi
