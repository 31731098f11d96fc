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
#include "entcmi/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace entcmi::opt {

SimplexResult simplex_minimize(const Objective& f, const Eigen::VectorXd& x0,
                               const SimplexOptions& options) {
  const int n = static_cast<int>(x0.size());
  SimplexResult result;
  if (n == 0) {
    result.x = x0;
    result.f = f(x0);
    result.evals = 1;
    return result;
  }

  // Dimension-adaptive expansion/contraction/shrink coefficients.
  const double alpha = 1.0;
  const double beta = 1.0 + 2.0 / n;
  const double gamma = 0.75 - 0.5 / n;
  const double delta = 1.0 - 1.0 / n;

  std::vector<Eigen::VectorXd> pts(n + 1, x0);
  std::vector<double> vals(n + 1);
  for (int i = 1; i <= n; ++i) pts[i][i - 1] += options.init_step;
  for (int i = 0; i <= n; ++i) vals[i] = f(pts[i]);
  long long evals = n + 1;

  std::vector<int> order(n + 1);
  std::iota(order.begin(), order.end(), 0);

  for (int iter = 0; iter < options.max_iters; ++iter) {
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return vals[i] < vals[j]; });
    const int best = order[0];
    const int worst = order[n];
    const int second_worst = order[n - 1];
    if (vals[worst] - vals[best] <= options.f_tol) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i <= n; ++i) {
      if (i != worst) centroid += pts[i];
    }
    centroid /= n;

    const Eigen::VectorXd reflected =
        centroid + alpha * (centroid - pts[worst]);
    const double f_reflected = f(reflected);
    ++evals;

    if (f_reflected < vals[best]) {
      const Eigen::VectorXd expanded =
          centroid + beta * (reflected - centroid);
      const double f_expanded = f(expanded);
      ++evals;
      if (f_expanded < f_reflected) {
        pts[worst] = expanded;
        vals[worst] = f_expanded;
      } else {
        pts[worst] = reflected;
        vals[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < vals[second_worst]) {
      pts[worst] = reflected;
      vals[worst] = f_reflected;
      continue;
    }
    if (f_reflected < vals[worst]) {
      const Eigen::VectorXd contracted =
          centroid + gamma * (reflected - centroid);
      const double f_contracted = f(contracted);
      ++evals;
      if (f_contracted <= f_reflected) {
        pts[worst] = contracted;
        vals[worst] = f_contracted;
        continue;
      }
    } else {
      const Eigen::VectorXd contracted =
          centroid - gamma * (centroid - pts[worst]);
      const double f_contracted = f(contracted);
      ++evals;
      if (f_contracted < vals[worst]) {
        pts[worst] = contracted;
        vals[worst] = f_contracted;
        continue;
      }
    }
    for (int i = 0; i <= n; ++i) {
      if (i == best) continue;
      pts[i] = pts[best] + delta * (pts[i] - pts[best]);
      vals[i] = f(pts[i]);
      ++evals;
    }
  }

  const auto best_it = std::min_element(vals.begin(), vals.end());
  result.x = pts[static_cast<std::size_t>(best_it - vals.begin())];
  result.f = *best_it;
  result.evals = evals;
  return result;
}

MultiStartResult multistart_minimize(const Objective& f, int dim,
                                     const std::vector<Eigen::VectorXd>& seeds,
                                     const MultiStartOptions& options) {
  std::mt19937_64 eng(options.seed);
  std::normal_distribution<double> norm(0.0, 1.0);

  MultiStartResult best;
  const double target = options.known_lower_bound + options.stop_tol;
  const auto done = [&] { return best.f <= target; };

  SimplexOptions run;
  run.max_iters = options.iters_per_start;
  run.f_tol = options.f_tol;
  run.init_step = options.init_step;

  const auto attempt = [&](const Eigen::VectorXd& x0, double step) {
    SimplexOptions local = run;
    local.init_step = step;
    const SimplexResult r = simplex_minimize(f, x0, local);
    best.evals += r.evals;
    if (r.f < best.f) {
      best.f = r.f;
      best.x = r.x;
    }
  };

  for (const Eigen::VectorXd& seed : seeds) {
    attempt(seed, options.init_step);
    if (done()) {
      best.reached_bound = true;
      return best;
    }
  }
  for (int s = 0; s < options.restarts; ++s) {
    Eigen::VectorXd x0(dim);
    for (int i = 0; i < dim; ++i) x0[i] = options.start_sigma * norm(eng);
    attempt(x0, options.init_step);
    if (done()) {
      best.reached_bound = true;
      return best;
    }
  }
  for (int round = 0; round < options.polish_rounds; ++round) {
    const double step = options.init_step * std::pow(0.35, round + 1);
    const double before = best.f;
    attempt(best.x, step);
    if (done()) {
      best.reached_bound = true;
      return best;
    }
    if (before - best.f <= options.f_tol && round >= 1) break;
  }
  for (int hop = 0; hop < options.hop_rounds; ++hop) {
    Eigen::VectorXd x0 = best.x;
    for (int i = 0; i < dim; ++i) x0[i] += options.hop_sigma * norm(eng);
    attempt(x0, options.init_step * 0.5);
    if (done()) {
      best.reached_bound = true;
      return best;
    }
  }
  // One final tight polish after hopping.
  attempt(best.x, options.init_step * std::pow(0.35, options.polish_rounds));
  best.reached_bound = done();
  return best;
}

}  // namespace entcmi::opt
