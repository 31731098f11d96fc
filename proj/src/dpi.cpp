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
#include <limits>
#include <stdexcept>

#include "entcmi/dpi.hpp"
#include "entcmi/ed.hpp"
#include "entcmi/errors.hpp"
#include "entcmi/info.hpp"

namespace entcmi {

double check_dpi_relative_entropy(const JointPmf& p, const JointPmf& q,
                                  const StochasticMap& t) {
  const double before = relative_entropy(p, q);
  if (std::isinf(before)) return before;
  const double after =
      relative_entropy(apply_stochastic_map(t, p), apply_stochastic_map(t, q));
  return before - after;
}

double check_dpi_cmi(const Fig3Spec& spec) {
  const JointPmf joint = build_fig3(spec);
  const std::string a = spec.p_a_given_x.out_axes()[0].name;
  const std::string b = spec.p_b_given_y.out_axes()[0].name;
  const std::string x = spec.p_x_given_lambda.out_axes()[0].name;
  const std::string y = spec.p_y_given_lambda.out_axes()[0].name;
  const std::string lambda = spec.p_lambda.axes()[0].name;
  const double coarse = conditional_mutual_information(joint, {x}, {y},
                                                       {lambda});
  const double fine = conditional_mutual_information(joint, {a}, {b},
                                                     {lambda});
  return coarse - fine;
}

StochasticMap build_product_map(const StochasticMap& p_a_given_x,
                                const StochasticMap& p_b_given_y) {
  if (p_a_given_x.in_axes().size() != 1 ||
      p_a_given_x.out_axes().size() != 1 ||
      p_b_given_y.in_axes().size() != 1 ||
      p_b_given_y.out_axes().size() != 1) {
    throw std::invalid_argument("product channel expects single-axis maps");
  }
  const std::size_t n_x = p_a_given_x.n_in();
  const std::size_t n_y = p_b_given_y.n_in();
  const std::size_t n_a = p_a_given_x.n_out();
  const std::size_t n_b = p_b_given_y.n_out();
  std::vector<double> table(n_x * n_y * n_a * n_b);
  for (std::size_t a = 0; a < n_a; ++a) {
    for (std::size_t b = 0; b < n_b; ++b) {
      for (std::size_t x = 0; x < n_x; ++x) {
        for (std::size_t y = 0; y < n_y; ++y) {
          table[(a * n_b + b) * (n_x * n_y) + x * n_y + y] =
              p_a_given_x(a, x) * p_b_given_y(b, y);
        }
      }
    }
  }
  return StochasticMap(
      {p_a_given_x.in_axes()[0], p_b_given_y.in_axes()[0]},
      {p_a_given_x.out_axes()[0], p_b_given_y.out_axes()[0]},
      std::move(table));
}

Fig3IdentityReport verify_fig3_identities(const Fig3Spec& spec) {
  validate_fig3(spec);
  const int n_l = spec.p_lambda.axes()[0].size;
  const int n_x = spec.p_x_given_lambda.out_axes()[0].size;
  const int n_y = spec.p_y_given_lambda.out_axes()[0].size;
  const int n_a = spec.p_a_given_x.out_axes()[0].size;
  const int n_b = spec.p_b_given_y.out_axes()[0].size;
  const JointPmf joint = build_fig3(spec);  // axes (a, b, x, y, lambda)

  Fig3IdentityReport report;
  std::vector<int> idx(5);

  for (int l = 0; l < n_l; ++l) {
    const double p_l = spec.p_lambda[static_cast<std::size_t>(l)];
    if (p_l <= 0.0) continue;

    // Conditionals of the built joint given lambda = l.
    std::vector<double> ab(static_cast<std::size_t>(n_a) * n_b, 0.0);
    std::vector<double> xy(static_cast<std::size_t>(n_x) * n_y, 0.0);
    for (std::size_t lin = 0; lin < joint.size(); ++lin) {
      joint.unflatten(lin, idx);
      if (idx[4] != l) continue;
      ab[idx[0] * n_b + idx[1]] += joint[lin] / p_l;
      xy[idx[2] * n_y + idx[3]] += joint[lin] / p_l;
    }
    std::vector<double> pa(n_a, 0.0), pb(n_b, 0.0);
    for (int a = 0; a < n_a; ++a) {
      for (int b = 0; b < n_b; ++b) pa[a] += ab[a * n_b + b];
    }
    for (int b = 0; b < n_b; ++b) {
      for (int a = 0; a < n_a; ++a) pb[b] += ab[a * n_b + b];
    }
    std::vector<double> px(n_x, 0.0), py(n_y, 0.0);
    for (int x = 0; x < n_x; ++x) {
      for (int y = 0; y < n_y; ++y) px[x] += xy[x * n_y + y];
    }
    for (int y = 0; y < n_y; ++y) {
      for (int x = 0; x < n_x; ++x) py[y] += xy[x * n_y + y];
    }

    for (int a = 0; a < n_a; ++a) {
      double composed = 0.0;
      for (int x = 0; x < n_x; ++x) {
        composed += spec.p_a_given_x(a, x) * spec.p_x_given_lambda(x, l);
      }
      report.markov_a = std::max(report.markov_a, std::abs(pa[a] - composed));
    }
    for (int b = 0; b < n_b; ++b) {
      double composed = 0.0;
      for (int y = 0; y < n_y; ++y) {
        composed += spec.p_b_given_y(b, y) * spec.p_y_given_lambda(y, l);
      }
      report.markov_b = std::max(report.markov_b, std::abs(pb[b] - composed));
    }
    for (int a = 0; a < n_a; ++a) {
      for (int b = 0; b < n_b; ++b) {
        report.independence_ab =
            std::max(report.independence_ab,
                     std::abs(ab[a * n_b + b] - pa[a] * pb[b]));
      }
    }
    for (int x = 0; x < n_x; ++x) {
      for (int y = 0; y < n_y; ++y) {
        report.independence_xy =
            std::max(report.independence_xy,
                     std::abs(xy[x * n_y + y] - px[x] * py[y]));
      }
    }
    for (int a = 0; a < n_a; ++a) {
      for (int b = 0; b < n_b; ++b) {
        double through_joint = 0.0;
        double through_product = 0.0;
        for (int x = 0; x < n_x; ++x) {
          for (int y = 0; y < n_y; ++y) {
            const double t = spec.p_a_given_x(a, x) * spec.p_b_given_y(b, y);
            through_joint += t * xy[x * n_y + y];
            through_product += t * px[x] * py[y];
          }
        }
        report.transport_joint =
            std::max(report.transport_joint,
                     std::abs(ab[a * n_b + b] - through_joint));
        report.transport_product =
            std::max(report.transport_product,
                     std::abs(pa[a] * pb[b] - through_product));
      }
    }
  }
  report.max_residual = std::max({report.markov_a, report.markov_b,
                                  report.independence_ab,
                                  report.independence_xy,
                                  report.transport_joint,
                                  report.transport_product});
  return report;
}

std::pair<CmiMiWitness, CmiMiWitness> search_cmi_vs_mi(
    const SweepConfig& config) {
  // Parity cause: independent uniform bits with lambda = a xor b. The pair
  // is independent, yet fixing lambda makes one bit determine the other.
  std::vector<double> parity(8, 0.0);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      parity[(a * 2 + b) * 2 + (a ^ b)] = 0.25;
    }
  }
  CmiMiWitness above{
      JointPmf({Axis{"a", 2}, Axis{"b", 2}, Axis{"lambda", 2}}, parity), 0.0,
      0.0};

  // Copy cause: a = b uniform with lambda a copy; fixing lambda removes the
  // dependence entirely.
  std::vector<double> copy(8, 0.0);
  copy[(0 * 2 + 0) * 2 + 0] = 0.5;
  copy[(1 * 2 + 1) * 2 + 1] = 0.5;
  CmiMiWitness below{
      JointPmf({Axis{"a", 2}, Axis{"b", 2}, Axis{"lambda", 2}}, copy), 0.0,
      0.0};

  const auto measure = [](CmiMiWitness& w) {
    w.cmi = conditional_mutual_information(w.pmf, {"a"}, {"b"}, {"lambda"});
    w.mi = mutual_information(w.pmf, {"a"}, {"b"});
  };
  measure(above);
  measure(below);

  Rng rng(config.seed);
  for (int t = 0; t < config.trials; ++t) {
    const int n_a = rng.uniform_int(config.min_card, config.max_card);
    const int n_b = rng.uniform_int(config.min_card, config.max_card);
    const int n_l = rng.uniform_int(config.min_card, config.max_card);
    CmiMiWitness w{random_joint_pmf(rng, {Axis{"a", n_a}, Axis{"b", n_b},
                                          Axis{"lambda", n_l}}),
                   0.0, 0.0};
    measure(w);
    if (w.cmi - w.mi > above.cmi - above.mi) above = w;
    if (w.mi - w.cmi > below.mi - below.cmi) below = w;
  }
  return {above, below};
}

std::string to_string(SweepKind kind) {
  switch (kind) {
    case SweepKind::kDpiRelativeEntropy:
      return "dpi-re";
    case SweepKind::kDpiCmi:
      return "dpi-cmi";
    case SweepKind::kFig3Identities:
      return "fig3-ids";
    case SweepKind::kEdLeEf:
      return "ed-le-ef";
    case SweepKind::kCmiVsMi:
      return "cmi-vs-mi";
  }
  return "unknown";
}

namespace {

nlohmann::json pmf_instance(const JointPmf& p) {
  nlohmann::json axes = nlohmann::json::array();
  for (const Axis& ax : p.axes()) {
    axes.push_back({{"name", ax.name}, {"size", ax.size}});
  }
  return {{"axes", axes}, {"probs", p.probs()}};
}

void record(SweepReport* report, int trial, double lhs, double rhs,
            double margin, nlohmann::json instance) {
  report->violations.push_back(
      ViolationRecord{trial, lhs, rhs, margin, std::move(instance)});
}

}  // namespace

SweepReport run_sweep(SweepKind kind, const SweepConfig& config) {
  if (config.trials < 1) {
    throw ConfigError("sweep needs a positive trial count");
  }
  if (config.min_card < 1 || config.max_card < config.min_card) {
    throw ConfigError("sweep cardinality range is empty");
  }
  SweepReport report;
  report.kind = kind;
  report.trials = config.trials;
  report.seed = config.seed;
  report.slack = config.slack;
  report.worst_margin = std::numeric_limits<double>::infinity();

  Rng rng(config.seed);
  for (int trial = 0; trial < config.trials; ++trial) {
    switch (kind) {
      case SweepKind::kDpiRelativeEntropy: {
        const int n_x = rng.uniform_int(config.min_card, config.max_card);
        const int n_y = rng.uniform_int(config.min_card, config.max_card);
        const std::vector<Axis> x_axes{Axis{"x", n_x}};
        const JointPmf p = random_joint_pmf(rng, x_axes);
        const JointPmf q = random_joint_pmf(rng, x_axes);
        const StochasticMap t =
            random_stochastic_map(rng, x_axes, {Axis{"y", n_y}});
        const double margin = check_dpi_relative_entropy(p, q, t);
        report.worst_margin = std::min(report.worst_margin, margin);
        if (margin < -config.slack) {
          record(&report, trial, relative_entropy(p, q) - margin,
                 relative_entropy(p, q), margin,
                 {{"p", pmf_instance(p)}, {"q", pmf_instance(q)}});
        }
        break;
      }
      case SweepKind::kDpiCmi: {
        Fig3Cards cards;
        cards.n_a = rng.uniform_int(config.min_card, config.max_card);
        cards.n_b = rng.uniform_int(config.min_card, config.max_card);
        cards.n_x = rng.uniform_int(config.min_card, config.max_card);
        cards.n_y = rng.uniform_int(config.min_card, config.max_card);
        cards.n_lambda = rng.uniform_int(config.min_card, config.max_card);
        const Fig3Spec spec = random_fig3(rng, cards);
        const double margin = check_dpi_cmi(spec);
        report.worst_margin = std::min(report.worst_margin, margin);
        if (margin < -config.slack) {
          record(&report, trial, 0.0, 0.0, margin,
                 pmf_instance(build_fig3(spec)));
        }
        break;
      }
      case SweepKind::kFig3Identities: {
        Fig3Cards cards;
        cards.n_a = rng.uniform_int(config.min_card, config.max_card);
        cards.n_b = rng.uniform_int(config.min_card, config.max_card);
        cards.n_x = rng.uniform_int(config.min_card, config.max_card);
        cards.n_y = rng.uniform_int(config.min_card, config.max_card);
        cards.n_lambda = rng.uniform_int(config.min_card, config.max_card);
        const Fig3Spec spec = random_fig3(rng, cards);
        const Fig3IdentityReport ids = verify_fig3_identities(spec);
        const double margin = -ids.max_residual;
        report.worst_margin = std::min(report.worst_margin, margin);
        if (ids.max_residual > config.slack) {
          record(&report, trial, ids.max_residual, config.slack, margin,
                 pmf_instance(build_fig3(spec)));
        }
        break;
      }
      case SweepKind::kEdLeEf: {
        const int n_alpha = rng.uniform_int(
            std::max(2, config.min_card), std::max(2, config.max_card));
        const Fig2Spec spec = random_fig2(rng, 2, 2, n_alpha, false);
        ExtensionBudget budget = config.budget;
        budget.seed = rng.next_seed();
        const EdEfCheckReport check =
            check_ed_le_ef(spec, n_alpha, budget, GammaEvent{},
                           config.slack);
        report.worst_margin = std::min(report.worst_margin, check.margin);
        nlohmann::json instance = {{"n_alpha", n_alpha},
                                   {"ed", check.ed.best_value},
                                   {"ef_sum", check.ef_sum},
                                   {"p_gamma", check.p_gamma}};
        if (check.violation) {
          record(&report, trial, check.ed.best_value, check.ef_sum,
                 check.margin, instance);
        }
        const double chain = std::max(
            {check.source_split_residual, check.gamma_indep_residual,
             std::max(0.0, -check.processed_margin)});
        if (chain > kChainResidualTolerance) {
          instance["chain_residual"] = chain;
          record(&report, trial, chain, kChainResidualTolerance, -chain,
                 instance);
        }
        break;
      }
      case SweepKind::kCmiVsMi: {
        SweepConfig inner = config;
        inner.seed = rng.next_seed();
        inner.trials = 1;
        const auto [above, below] = search_cmi_vs_mi(inner);
        const double margin =
            std::min(above.cmi - above.mi, below.mi - below.cmi);
        report.worst_margin = std::min(report.worst_margin, margin);
        if (margin < config.slack) {
          record(&report, trial, margin, config.slack, margin,
                 {{"above_gap", above.cmi - above.mi},
                  {"below_gap", below.mi - below.cmi}});
        }
        break;
      }
    }
  }
  return report;
}

}  // namespace entcmi
