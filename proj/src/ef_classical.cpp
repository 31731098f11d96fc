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
#include <cmath>
#include <stdexcept>

#include "entcmi/ef.hpp"
#include "entcmi/errors.hpp"
#include "entcmi/info.hpp"
#include "entcmi/nelder_mead.hpp"

namespace entcmi {

namespace {

// Minimizes I(a : b | alpha) over conditionals P(alpha | a, b); parameters
// are unconstrained reals mapped to the simplex by squared magnitudes.
class ClassicalExtensionProblem {
 public:
  ClassicalExtensionProblem(const std::vector<double>& p_ab, int n_a, int n_b,
                            int n_ext)
      : p_ab_(p_ab),
        n_a_(n_a),
        n_b_(n_b),
        n_ext_(n_ext),
        joint_(p_ab.size() * static_cast<std::size_t>(n_ext)),
        h_a_ext_(static_cast<std::size_t>(n_a) * n_ext),
        h_b_ext_(static_cast<std::size_t>(n_b) * n_ext),
        h_ext_(static_cast<std::size_t>(n_ext)) {}

  int dim() const { return n_a_ * n_b_ * n_ext_; }

  /// Conditional table P(alpha | a, b) from raw parameters, flattened as
  /// [(a * n_b + b) * n_ext + alpha].
  std::vector<double> conditional(const Eigen::VectorXd& x) const {
    std::vector<double> cond(joint_.size());
    const int cells = n_a_ * n_b_;
    for (int ab = 0; ab < cells; ++ab) {
      double mass = 0.0;
      for (int k = 0; k < n_ext_; ++k) {
        const double t = x[ab * n_ext_ + k];
        cond[ab * n_ext_ + k] = t * t;
        mass += t * t;
      }
      if (mass <= 0.0) {
        for (int k = 0; k < n_ext_; ++k) {
          cond[ab * n_ext_ + k] = 1.0 / n_ext_;
        }
      } else {
        for (int k = 0; k < n_ext_; ++k) cond[ab * n_ext_ + k] /= mass;
      }
    }
    return cond;
  }

  double value(const Eigen::VectorXd& x) {
    const std::vector<double> cond = conditional(x);
    for (std::size_t i = 0; i < joint_.size(); ++i) {
      joint_[i] = p_ab_[i / n_ext_] * cond[i];
    }
    std::fill(h_a_ext_.begin(), h_a_ext_.end(), 0.0);
    std::fill(h_b_ext_.begin(), h_b_ext_.end(), 0.0);
    std::fill(h_ext_.begin(), h_ext_.end(), 0.0);
    for (int a = 0; a < n_a_; ++a) {
      for (int b = 0; b < n_b_; ++b) {
        for (int k = 0; k < n_ext_; ++k) {
          const double v = joint_[(a * n_b_ + b) * n_ext_ + k];
          h_a_ext_[a * n_ext_ + k] += v;
          h_b_ext_[b * n_ext_ + k] += v;
          h_ext_[k] += v;
        }
      }
    }
    return table_entropy(h_a_ext_) + table_entropy(h_b_ext_) -
           table_entropy(h_ext_) - table_entropy(joint_);
  }

 private:
  static double table_entropy(const std::vector<double>& t) {
    double h = 0.0;
    for (double v : t) {
      if (v > 0.0) h -= v * std::log(v);
    }
    return h;
  }

  const std::vector<double>& p_ab_;
  int n_a_;
  int n_b_;
  int n_ext_;
  std::vector<double> joint_;
  std::vector<double> h_a_ext_;
  std::vector<double> h_b_ext_;
  std::vector<double> h_ext_;
};

Eigen::VectorXd deterministic_seed(int n_a, int n_b, int n_ext, int mode) {
  // mode 0: alpha = a, mode 1: alpha = b, mode 2: alpha = (a, b) pair,
  // mode 3: uniform. Deterministic assignments give I(a : b | alpha) = 0
  // whenever the copied group fits in the family.
  Eigen::VectorXd x =
      Eigen::VectorXd::Zero(static_cast<long>(n_a) * n_b * n_ext);
  for (int a = 0; a < n_a; ++a) {
    for (int b = 0; b < n_b; ++b) {
      int target = 0;
      switch (mode) {
        case 0: target = a % n_ext; break;
        case 1: target = b % n_ext; break;
        case 2: target = (a * n_b + b) % n_ext; break;
        default:
          for (int k = 0; k < n_ext; ++k) {
            x[(a * n_b + b) * n_ext + k] = 1.0;
          }
          continue;
      }
      x[(a * n_b + b) * n_ext + target] = 1.0;
    }
  }
  return x;
}

}  // namespace

OptReport classical_ef(const JointPmf& p_ab, const ExtensionBudget& budget) {
  validate_budget(budget);
  if (p_ab.num_axes() != 2) {
    throw std::invalid_argument(
        "formation cost expects a pmf over exactly two axes");
  }
  const int n_a = p_ab.axes()[0].size;
  const int n_b = p_ab.axes()[1].size;
  const int n_ext = budget.n_alpha > 0 ? budget.n_alpha : n_a * n_b;

  OptReport report;
  report.seed = budget.seed;
  report.bound_direction = BoundDirection::kUpperBoundOfMin;

  const auto a_name = p_ab.axes()[0].name;
  const auto b_name = p_ab.axes()[1].name;

  if (n_ext == 1) {
    report.best_value = mutual_information(p_ab, {a_name}, {b_name});
    report.best_params = {{"family", "classical"},
                          {"n_alpha", 1},
                          {"exact", "single-value extension"}};
    report.converged = true;
    return report;
  }

  ClassicalExtensionProblem problem(p_ab.probs(), n_a, n_b, n_ext);
  const opt::Objective objective = [&problem](const Eigen::VectorXd& x) {
    return problem.value(x);
  };

  std::vector<Eigen::VectorXd> seeds;
  if (n_ext >= n_a) seeds.push_back(deterministic_seed(n_a, n_b, n_ext, 0));
  if (n_ext >= n_b) seeds.push_back(deterministic_seed(n_a, n_b, n_ext, 1));
  if (n_ext >= n_a * n_b) {
    seeds.push_back(deterministic_seed(n_a, n_b, n_ext, 2));
  }
  seeds.push_back(deterministic_seed(n_a, n_b, n_ext, 3));

  opt::MultiStartOptions options;
  options.restarts = budget.restarts;
  options.iters_per_start = budget.iterations;
  options.known_lower_bound = 0.0;
  options.stop_tol = budget.tolerance;
  options.seed = budget.seed;

  const opt::MultiStartResult best =
      opt::multistart_minimize(objective, problem.dim(), seeds, options);

  report.evaluations = best.evals;
  report.converged = best.reached_bound;
  report.best_value = std::max(0.0, best.f);
  if (best.f < -kClassicalClampWindow) {
    throw InvariantError("extension search produced a negative objective");
  }
  report.best_params = {
      {"family", "classical"},
      {"n_alpha", n_ext},
      {"axes", {a_name, b_name}},
      {"p_alpha_given_ab", problem.conditional(best.x)},
  };
  return report;
}

}  // namespace entcmi
