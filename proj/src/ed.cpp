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
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "entcmi/ed.hpp"
#include "entcmi/ef.hpp"
#include "entcmi/errors.hpp"
#include "entcmi/info.hpp"
#include "entcmi/nelder_mead.hpp"
#include "entcmi/quantum_info.hpp"

namespace entcmi {

namespace {

constexpr std::uint64_t kInnerSeedSalt = 0x9e3779b97f4a7c15ull;
constexpr double kInfeasiblePenalty = 1.0;

ExtensionBudget inner_budget(const ExtensionBudget& outer, int n_family) {
  ExtensionBudget inner = outer;
  inner.n_alpha = n_family;
  inner.restarts = std::max(2, outer.restarts / 4);
  inner.iterations = std::max(300, outer.iterations / 4);
  inner.seed = outer.seed ^ kInnerSeedSalt;
  return inner;
}

StochasticMap map_from_params(const double* params,
                              std::vector<Axis> in_axes,
                              std::vector<Axis> out_axes) {
  const std::size_t n_in = axis_volume(in_axes);
  const std::size_t n_out = axis_volume(out_axes);
  std::vector<double> table(n_in * n_out);
  for (std::size_t i = 0; i < n_in; ++i) {
    double mass = 0.0;
    for (std::size_t o = 0; o < n_out; ++o) {
      const double t = params[o * n_in + i];
      table[o * n_in + i] = t * t;
      mass += t * t;
    }
    if (mass <= 0.0) {
      for (std::size_t o = 0; o < n_out; ++o) {
        table[o * n_in + i] = 1.0 / static_cast<double>(n_out);
      }
    } else {
      for (std::size_t o = 0; o < n_out; ++o) table[o * n_in + i] /= mass;
    }
  }
  return StochasticMap(std::move(in_axes), std::move(out_axes),
                       std::move(table));
}

void fill_identity_params(double* params, std::size_t n) {
  for (std::size_t o = 0; o < n; ++o) {
    for (std::size_t i = 0; i < n; ++i) {
      params[o * n + i] = (o == i) ? 1.0 : 0.0;
    }
  }
}

void require_two_axes(const JointPmf& p, const char* label) {
  if (p.num_axes() != 2) {
    throw std::invalid_argument(std::string(label) +
                                " must have exactly two axes");
  }
}

}  // namespace

std::pair<JointPmf, double> classical_post_state(const JointPmf& p_x,
                                                 const JointPmf& p_xp,
                                                 const ClassicalLocc& locc,
                                                 const GammaEvent& gamma) {
  require_two_axes(p_x, "left source");
  require_two_axes(p_xp, "right source");
  if (locc.u.in_axes() !=
      std::vector<Axis>{p_x.axes()[0], p_xp.axes()[0]}) {
    throw std::invalid_argument(
        "u must consume the first axes of the two sources");
  }
  const std::vector<Axis> v_head{p_x.axes()[1], p_xp.axes()[1]};
  if (locc.comm_arrow) {
    const std::vector<Axis> expect{v_head[0], v_head[1],
                                   locc.u.out_axes()[0],
                                   locc.u.out_axes()[1]};
    if (locc.v.in_axes() != expect) {
      throw std::invalid_argument(
          "v must consume the second source axes plus the u outputs");
    }
  } else if (locc.v.in_axes() != v_head) {
    throw std::invalid_argument(
        "v must consume the second axes of the two sources");
  }
  const std::string a_name = locc.u.out_axes()[0].name;
  const std::string ap_name = locc.u.out_axes()[1].name;
  const std::string b_name = locc.v.out_axes()[0].name;
  const std::string bp_name = locc.v.out_axes()[1].name;
  if (gamma.a_prime < 0 || gamma.a_prime >= locc.u.out_axes()[1].size ||
      gamma.b_prime < 0 || gamma.b_prime >= locc.v.out_axes()[1].size) {
    throw std::invalid_argument("kept outcome out of range");
  }

  JointPmf j = product_pmf({p_x, p_xp});
  j = extend_with_map(locc.u, j);
  std::vector<std::string> carry{a_name, ap_name, v_head[0].name,
                                 v_head[1].name};
  j = marginalize(j, carry);
  j = extend_with_map(locc.v, j);
  j = marginalize(j, {a_name, b_name, ap_name, bp_name});

  auto [post, p_gamma] =
      condition(j, {{ap_name, gamma.a_prime}, {bp_name, gamma.b_prime}});
  if (p_gamma < kPostSelectFloor) {
    throw InfeasibleError("post-selection probability below floor");
  }
  return {std::move(post), p_gamma};
}

namespace {

/// Exhaustive scan over deterministic local maps for two-valued wings; the
/// inner quantity at a trivial extension is the exact mutual information,
/// so the returned maximum certifies a lower bound.
double deterministic_certificate(const JointPmf& p_x, const JointPmf& p_xp,
                                 const GammaEvent& gamma) {
  const int n_a = p_x.axes()[0].size;
  const int n_b = p_x.axes()[1].size;
  const int n_ap = p_xp.axes()[0].size;
  const int n_bp = p_xp.axes()[1].size;
  const int u_in = n_a * n_ap;
  const int v_in = n_b * n_bp;

  const JointPmf joint = product_pmf({p_x, p_xp});  // axes (A, B, Ap, Bp)
  std::vector<int> idx(4);
  std::vector<double> cells(joint.size());
  std::vector<int> cell_u(joint.size()), cell_v(joint.size());
  for (std::size_t lin = 0; lin < joint.size(); ++lin) {
    joint.unflatten(lin, idx);
    cells[lin] = joint[lin];
    cell_u[lin] = idx[0] * n_ap + idx[2];
    cell_v[lin] = idx[1] * n_bp + idx[3];
  }

  const auto pow_int = [](int base, int exp) {
    long long r = 1;
    while (exp-- > 0) r *= base;
    return r;
  };
  const long long u_count = pow_int(u_in, u_in);
  const long long v_count = pow_int(v_in, v_in);

  std::vector<int> u_map(u_in), v_map(v_in);
  std::vector<double> post(static_cast<std::size_t>(n_a) * n_b);
  double best = 0.0;
  for (long long uc = 0; uc < u_count; ++uc) {
    long long u = uc;
    for (int i = 0; i < u_in; ++i) {
      u_map[i] = static_cast<int>(u % u_in);
      u /= u_in;
    }
    for (long long vc = 0; vc < v_count; ++vc) {
      long long v = vc;
      for (int i = 0; i < v_in; ++i) {
        v_map[i] = static_cast<int>(v % v_in);
        v /= v_in;
      }
      std::fill(post.begin(), post.end(), 0.0);
      double p_gamma = 0.0;
      for (std::size_t lin = 0; lin < cells.size(); ++lin) {
        const int uo = u_map[cell_u[lin]];
        if (uo % n_ap != gamma.a_prime) continue;
        const int vo = v_map[cell_v[lin]];
        if (vo % n_bp != gamma.b_prime) continue;
        post[(uo / n_ap) * n_b + vo / n_bp] += cells[lin];
        p_gamma += cells[lin];
      }
      if (p_gamma < kPostSelectFloor) continue;
      // Mutual information of the normalized post table.
      double mi = 0.0;
      std::vector<double> pa(n_a, 0.0), pb(n_b, 0.0);
      for (int a = 0; a < n_a; ++a) {
        for (int b = 0; b < n_b; ++b) {
          pa[a] += post[a * n_b + b];
          pb[b] += post[a * n_b + b];
        }
      }
      for (int a = 0; a < n_a; ++a) {
        for (int b = 0; b < n_b; ++b) {
          const double pab = post[a * n_b + b];
          if (pab > 0.0) {
            mi += (pab / p_gamma) *
                  std::log(pab * p_gamma / (pa[a] * pb[b]));
          }
        }
      }
      best = std::max(best, mi);
    }
  }
  return best;
}

}  // namespace

OptReport classical_ed(const JointPmf& p_x, const JointPmf& p_xp,
                       int n_lambda, const ExtensionBudget& budget,
                       bool comm_arrow, const GammaEvent& gamma) {
  validate_budget(budget);
  require_two_axes(p_x, "left source");
  require_two_axes(p_xp, "right source");
  if (n_lambda < 1) {
    throw ConfigError("extension size must be positive");
  }
  // Source labels carry no information here; reserved internal names keep
  // the fixed output names collision-free.
  const JointPmf src_x({Axis{"src_a", p_x.axes()[0].size},
                        Axis{"src_b", p_x.axes()[1].size}},
                       p_x.probs());
  const JointPmf src_xp({Axis{"src_ap", p_xp.axes()[0].size},
                         Axis{"src_bp", p_xp.axes()[1].size}},
                        p_xp.probs());
  const int n_a = src_x.axes()[0].size;
  const int n_b = src_x.axes()[1].size;
  const int n_ap = src_xp.axes()[0].size;
  const int n_bp = src_xp.axes()[1].size;
  if (gamma.a_prime < 0 || gamma.a_prime >= n_ap || gamma.b_prime < 0 ||
      gamma.b_prime >= n_bp) {
    throw std::invalid_argument("kept outcome out of range");
  }

  OptReport report;
  report.seed = budget.seed;
  report.bound_direction = BoundDirection::kHeuristic;

  // Any post-selected law admits a zero-value extension once the family can
  // copy the smaller outcome, so the maximum is exactly zero.
  if (n_lambda >= std::min(n_a, n_b)) {
    report.best_value = 0.0;
    report.converged = true;
    report.best_params = {{"exact", "copy extension collapses every inner "
                                    "value to zero"},
                          {"n_lambda", n_lambda}};
    return report;
  }

  const std::vector<Axis> u_in{src_x.axes()[0], src_xp.axes()[0]};
  const std::vector<Axis> u_out{Axis{"a", n_a}, Axis{"ap", n_ap}};
  std::vector<Axis> v_in{src_x.axes()[1], src_xp.axes()[1]};
  if (comm_arrow) {
    v_in.push_back(u_out[0]);
    v_in.push_back(u_out[1]);
  }
  const std::vector<Axis> v_out{Axis{"b", n_b}, Axis{"bp", n_bp}};
  const std::size_t u_table = axis_volume(u_in) * axis_volume(u_out);
  const std::size_t v_table = axis_volume(v_in) * axis_volume(v_out);
  const int dim = static_cast<int>(u_table + v_table);

  const ExtensionBudget inner = inner_budget(budget, n_lambda);
  const opt::Objective objective = [&](const Eigen::VectorXd& x) {
    ClassicalLocc locc{map_from_params(x.data(), u_in, u_out),
                       map_from_params(x.data() + u_table, v_in, v_out),
                       comm_arrow};
    try {
      const auto [post, p_gamma] =
          classical_post_state(src_x, src_xp, locc, gamma);
      const double value =
          n_lambda == 1
              ? mutual_information(post, {"a"}, {"b"})
              : classical_ef(post, inner).best_value;
      return -value;
    } catch (const InfeasibleError&) {
      return kInfeasiblePenalty;
    }
  };

  std::vector<Eigen::VectorXd> seeds;
  if (axis_volume(u_in) == axis_volume(u_out) &&
      axis_volume(v_in) == axis_volume(v_out)) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(dim);
    fill_identity_params(x.data(), axis_volume(u_in));
    fill_identity_params(x.data() + u_table, axis_volume(v_in));
    seeds.push_back(std::move(x));
  }

  opt::MultiStartOptions options;
  options.restarts = budget.restarts;
  options.iters_per_start = budget.iterations;
  options.known_lower_bound = -std::log(static_cast<double>(
      std::min(n_a, n_b)));
  options.stop_tol = budget.tolerance;
  options.seed = budget.seed;

  const opt::MultiStartResult best =
      opt::multistart_minimize(objective, dim, seeds, options);

  double value = std::max(0.0, -best.f);
  double certificate = -1.0;
  const bool small = n_a <= 2 && n_b <= 2 && n_ap <= 2 && n_bp <= 2;
  if (small && !comm_arrow && n_lambda == 1) {
    certificate = deterministic_certificate(src_x, src_xp, gamma);
    value = std::max(value, certificate);
  }

  report.evaluations = best.evals;
  report.converged = best.reached_bound;
  report.best_value = value;
  report.best_params = {
      {"u_table", map_from_params(best.x.data(), u_in, u_out).table()},
      {"v_table",
       map_from_params(best.x.data() + u_table, v_in, v_out).table()},
      {"n_lambda", n_lambda},
  };
  if (certificate >= 0.0) {
    report.best_params["deterministic_certificate"] = certificate;
  }
  return report;
}

std::pair<DensityMatrix, double> quantum_post_state(
    const DensityMatrix& rho_x, const DensityMatrix& rho_xp,
    const QuantumLocc& locc, const GammaEvent& gamma) {
  if (rho_x.subsystems().size() != 2 || rho_xp.subsystems().size() != 2) {
    throw std::invalid_argument(
        "post state expects two bipartite input states");
  }
  const int n_a = rho_x.subsystems()[0].dim;
  const int n_b = rho_x.subsystems()[1].dim;
  const int n_ap = rho_xp.subsystems()[0].dim;
  const int n_bp = rho_xp.subsystems()[1].dim;
  if (locc.u.dim != n_a * n_ap) {
    throw std::invalid_argument("u dimension mismatch");
  }
  const std::size_t v_blocks = locc.comm_arrow ? n_a : 1;
  if (locc.v.size() != v_blocks) {
    throw std::invalid_argument(
        locc.comm_arrow ? "one v block per left outcome required"
                        : "a single shared v block required");
  }
  for (const UnitaryParams& v : locc.v) {
    if (v.dim != n_b * n_bp) {
      throw std::invalid_argument("v dimension mismatch");
    }
  }
  if (gamma.a_prime < 0 || gamma.a_prime >= n_ap || gamma.b_prime < 0 ||
      gamma.b_prime >= n_bp) {
    throw std::invalid_argument("kept outcome out of range");
  }

  const Eigen::MatrixXcd u = params_to_unitary(locc.u);
  std::vector<Eigen::MatrixXcd> vs;
  for (const UnitaryParams& v : locc.v) vs.push_back(params_to_unitary(v));

  // Product state on (A, B, Ap, Bp) with the last index fastest.
  const int d_t = n_a * n_b * n_ap * n_bp;
  Eigen::MatrixXcd rho_t(d_t, d_t);
  const auto compose = [&](int va, int vb, int vap, int vbp) {
    return ((va * n_b + vb) * n_ap + vap) * n_bp + vbp;
  };
  for (int a1 = 0; a1 < n_a; ++a1) {
    for (int b1 = 0; b1 < n_b; ++b1) {
      for (int ap1 = 0; ap1 < n_ap; ++ap1) {
        for (int bp1 = 0; bp1 < n_bp; ++bp1) {
          for (int a2 = 0; a2 < n_a; ++a2) {
            for (int b2 = 0; b2 < n_b; ++b2) {
              for (int ap2 = 0; ap2 < n_ap; ++ap2) {
                for (int bp2 = 0; bp2 < n_bp; ++bp2) {
                  rho_t(compose(a1, b1, ap1, bp1), compose(a2, b2, ap2, bp2)) =
                      rho_x.matrix()(a1 * n_b + b1, a2 * n_b + b2) *
                      rho_xp.matrix()(ap1 * n_bp + bp1, ap2 * n_bp + bp2);
                }
              }
            }
          }
        }
      }
    }
  }

  // q^{a,b} = conj(w^{a,b}) with w[(A,B,Ap,Bp)] = U[(a,gamma_a),(A,Ap)]
  // V^a[(b,gamma_b),(B,Bp)]; each left outcome contributes the PSD block
  // Q_a^dagger rho_t Q_a.
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n_a * n_b, n_a * n_b);
  double p_gamma = 0.0;
  for (int a = 0; a < n_a; ++a) {
    const Eigen::MatrixXcd& v = vs[locc.comm_arrow ? a : 0];
    Eigen::MatrixXcd q(d_t, n_b);
    for (int b = 0; b < n_b; ++b) {
      for (int va = 0; va < n_a; ++va) {
        for (int vb = 0; vb < n_b; ++vb) {
          for (int vap = 0; vap < n_ap; ++vap) {
            for (int vbp = 0; vbp < n_bp; ++vbp) {
              q(compose(va, vb, vap, vbp), b) = std::conj(
                  u(a * n_ap + gamma.a_prime, va * n_ap + vap) *
                  v(b * n_bp + gamma.b_prime, vb * n_bp + vbp));
            }
          }
        }
      }
    }
    const Eigen::MatrixXcd block = q.adjoint() * rho_t * q;
    p_gamma += block.trace().real();
    out.block(a * n_b, a * n_b, n_b, n_b) = block;
  }
  if (p_gamma < kPostSelectFloor) {
    throw InfeasibleError("post-selection probability below floor");
  }
  out /= p_gamma;
  return {DensityMatrix({Subsystem{"a", n_a}, Subsystem{"b", n_b}},
                        std::move(out)),
          p_gamma};
}

OptReport quantum_ed(const DensityMatrix& rho_x, const DensityMatrix& rho_xp,
                     int dim_lambda, const ExtensionBudget& budget,
                     bool comm_arrow, const GammaEvent& gamma) {
  validate_budget(budget);
  if (rho_x.subsystems().size() != 2 || rho_xp.subsystems().size() != 2) {
    throw std::invalid_argument(
        "distillation expects two bipartite input states");
  }
  if (dim_lambda < 1) {
    throw ConfigError("conditioning dimension must be positive");
  }
  const int n_a = rho_x.subsystems()[0].dim;
  const int n_b = rho_x.subsystems()[1].dim;
  const int n_ap = rho_xp.subsystems()[0].dim;
  const int n_bp = rho_xp.subsystems()[1].dim;

  const int u_dim = n_a * n_ap;
  const int v_dim = n_b * n_bp;
  const int v_blocks = comm_arrow ? n_a : 1;
  const int u_len = u_dim * u_dim;
  const int v_len = v_dim * v_dim;
  const int dim = u_len + v_blocks * v_len;

  const ExtensionBudget inner = inner_budget(budget, dim_lambda);
  const opt::Objective objective = [&](const Eigen::VectorXd& x) {
    QuantumLocc locc;
    locc.comm_arrow = comm_arrow;
    locc.u.dim = u_dim;
    locc.u.params.assign(x.data(), x.data() + u_len);
    for (int k = 0; k < v_blocks; ++k) {
      UnitaryParams v;
      v.dim = v_dim;
      v.params.assign(x.data() + u_len + k * v_len,
                      x.data() + u_len + (k + 1) * v_len);
      locc.v.push_back(std::move(v));
    }
    try {
      const auto [post, p_gamma] =
          quantum_post_state(rho_x, rho_xp, locc, gamma);
      const double value =
          dim_lambda == 1
              ? quantum_mutual_information(post, {"a"}, {"b"})
              : quantum_ef_k0_bounded(post, dim_lambda, inner).best_value;
      return -value;
    } catch (const InfeasibleError&) {
      return kInfeasiblePenalty;
    }
  };

  std::vector<Eigen::VectorXd> seeds;
  seeds.push_back(Eigen::VectorXd::Zero(dim));  // identity unitaries

  opt::MultiStartOptions options;
  options.restarts = budget.restarts;
  options.iters_per_start = budget.iterations;
  options.known_lower_bound =
      -2.0 * std::log(static_cast<double>(std::min(n_a, n_b)));
  options.stop_tol = budget.tolerance;
  options.seed = budget.seed;
  options.init_step = 0.6;

  const opt::MultiStartResult best =
      opt::multistart_minimize(objective, dim, seeds, options);

  OptReport report;
  report.seed = budget.seed;
  report.bound_direction = BoundDirection::kHeuristic;
  report.evaluations = best.evals;
  report.converged = best.reached_bound;
  report.best_value = std::max(0.0, -best.f);
  std::vector<double> raw(best.x.data(), best.x.data() + best.x.size());
  report.best_params = {{"dim_lambda", dim_lambda},
                        {"comm_arrow", comm_arrow},
                        {"unitary_params", raw}};
  return report;
}

EdEfCheckReport check_ed_le_ef(const Fig2Spec& spec, int n_family,
                               const ExtensionBudget& budget,
                               const GammaEvent& gamma, double slack) {
  if (spec.comm_arrow) {
    throw std::invalid_argument(
        "the comparison requires a net without the communication arrow");
  }
  validate_fig2(spec);
  if (n_family < 1) {
    throw ConfigError("family size must be positive");
  }

  const JointPmf p_x = marginalize(build_fig1(spec.x), {"A", "B"});
  const JointPmf p_xp = marginalize(build_fig1(spec.xp), {"Ap", "Bp"});

  ExtensionBudget ef_budget = budget;
  ef_budget.n_alpha = n_family;

  EdEfCheckReport report;
  report.ed = classical_ed(p_x, p_xp, n_family, budget, false, gamma);
  report.ef_x = classical_ef(p_x, ef_budget);
  report.ef_xp = classical_ef(p_xp, ef_budget);
  report.ef_sum = report.ef_x.best_value + report.ef_xp.best_value;
  report.margin = report.ef_sum - report.ed.best_value;
  report.violation = report.margin < -slack;

  const JointPmf joint = build_fig2(spec, /*keep_ancestors=*/true);
  const double i_src = conditional_mutual_information(
      joint, {"A", "Ap"}, {"B", "Bp"}, {"alpha", "alphap"});
  const double i_split =
      conditional_mutual_information(joint, {"A"}, {"B"}, {"alpha"}) +
      conditional_mutual_information(joint, {"Ap"}, {"Bp"}, {"alphap"});
  report.source_split_residual = std::abs(i_src - i_split);

  auto [kept, p_gamma] = condition(
      joint, {{"ap", gamma.a_prime}, {"bp", gamma.b_prime}});
  report.p_gamma = p_gamma;
  const double i_src_kept = conditional_mutual_information(
      kept, {"A", "Ap"}, {"B", "Bp"}, {"alpha", "alphap"});
  report.gamma_indep_residual = std::abs(i_src - i_src_kept);
  const double i_out_kept = conditional_mutual_information(
      kept, {"a"}, {"b"}, {"alpha", "alphap"});
  report.processed_margin = i_src - i_out_kept;
  return report;
}

}  // namespace entcmi
