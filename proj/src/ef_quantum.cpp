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
#include <random>
#include <stdexcept>

#include "entcmi/ef.hpp"
#include "entcmi/errors.hpp"
#include "entcmi/nelder_mead.hpp"
#include "entcmi/quantum_info.hpp"
#include "entcmi/unitary.hpp"

namespace entcmi {

namespace {

constexpr double kRankFloor = 1e-12;
constexpr double kWeightFloor = 1e-15;
constexpr int kProjectionRounds = 200;

/// Spectral data of the input state: scaled.col(i) = sqrt(lambda_i) e_i over
/// the strictly positive part of the spectrum. Every valid pure-member
/// decomposition is an isometry mixing these columns.
struct SpectralRoot {
  int d = 0;
  int r = 0;
  Eigen::MatrixXcd scaled;
  Eigen::MatrixXcd vectors;  // full eigenvectors of the kept eigenvalues
  Eigen::VectorXd values;
};

SpectralRoot spectral_root(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix());
  SpectralRoot root;
  root.d = rho.dim();
  std::vector<int> kept;
  for (int i = 0; i < root.d; ++i) {
    if (es.eigenvalues()[i] > kRankFloor) kept.push_back(i);
  }
  root.r = static_cast<int>(kept.size());
  root.scaled.resize(root.d, root.r);
  root.vectors.resize(root.d, root.r);
  root.values.resize(root.r);
  for (int j = 0; j < root.r; ++j) {
    root.values[j] = es.eigenvalues()[kept[j]];
    root.vectors.col(j) = es.eigenvectors().col(kept[j]);
    root.scaled.col(j) = std::sqrt(root.values[j]) * root.vectors.col(j);
  }
  return root;
}

void require_bipartite(const DensityMatrix& rho) {
  if (rho.subsystems().size() != 2) {
    throw std::invalid_argument(
        "formation cost expects a state over exactly two subsystems");
  }
}

Eigen::MatrixXcd ptrace_second(const Eigen::MatrixXcd& m, int d_a, int d_b) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d_a, d_a);
  for (int i = 0; i < d_a; ++i) {
    for (int j = 0; j < d_a; ++j) {
      for (int k = 0; k < d_b; ++k) {
        out(i, j) += m(i * d_b + k, j * d_b + k);
      }
    }
  }
  return out;
}

Eigen::MatrixXcd ptrace_first(const Eigen::MatrixXcd& m, int d_a, int d_b) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d_b, d_b);
  for (int i = 0; i < d_b; ++i) {
    for (int j = 0; j < d_b; ++j) {
      for (int k = 0; k < d_a; ++k) {
        out(i, j) += m(k * d_b + i, k * d_b + j);
      }
    }
  }
  return out;
}

/// Packs a complex seed matrix into the flat (all real parts, then all
/// imaginary parts) layout used by params_to_isometry.
void pack_matrix(const Eigen::MatrixXcd& z, double* out) {
  const int rows = static_cast<int>(z.rows());
  const int cols = static_cast<int>(z.cols());
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      out[i * cols + j] = z(i, j).real();
      out[static_cast<std::size_t>(rows) * cols + i * cols + j] =
          z(i, j).imag();
    }
  }
}

/// Average of sum_k w_k [S(rho_a^k) + S(rho_b^k)] over pure ensembles of
/// n_members states described by an n_members x r isometry.
class PureEnsembleProblem {
 public:
  PureEnsembleProblem(const SpectralRoot& root, int d_a, int d_b,
                      int n_members)
      : root_(root), d_a_(d_a), d_b_(d_b), n_(n_members) {}

  int dim() const { return 2 * n_ * root_.r; }

  double value(const Eigen::VectorXd& x) const {
    const Eigen::MatrixXcd mix = params_to_isometry(x.data(), n_, root_.r);
    double total = 0.0;
    Eigen::MatrixXcd vmat(d_a_, d_b_);
    for (int k = 0; k < n_; ++k) {
      const Eigen::VectorXcd v =
          root_.scaled * mix.row(k).transpose();
      const double w = v.squaredNorm();
      if (w < kWeightFloor) continue;
      for (int i = 0; i < d_a_; ++i) {
        for (int j = 0; j < d_b_; ++j) {
          vmat(i, j) = v[i * d_b_ + j];
        }
      }
      // Both marginals of a pure bipartite state share the spectrum given
      // by the squared singular values.
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(vmat);
      double member = 0.0;
      for (int s = 0; s < svd.singularValues().size(); ++s) {
        const double p = svd.singularValues()[s] * svd.singularValues()[s] / w;
        if (p > kRankFloor) member -= p * std::log(p);
      }
      total += 2.0 * w * member;
    }
    return total;
  }

  /// Ensemble data at a parameter point: weights, normalized member vectors
  /// and the reconstruction residual against the input state.
  void describe(const Eigen::VectorXd& x, const Eigen::MatrixXcd& rho,
                nlohmann::json* out) const {
    const Eigen::MatrixXcd mix = params_to_isometry(x.data(), n_, root_.r);
    Eigen::MatrixXcd recon = Eigen::MatrixXcd::Zero(root_.d, root_.d);
    std::vector<double> weights;
    std::vector<std::vector<double>> members_re, members_im;
    for (int k = 0; k < n_; ++k) {
      const Eigen::VectorXcd v = root_.scaled * mix.row(k).transpose();
      const double w = v.squaredNorm();
      recon += v * v.adjoint();
      weights.push_back(w);
      std::vector<double> re(root_.d), im(root_.d);
      for (int i = 0; i < root_.d; ++i) {
        const std::complex<double> c =
            w >= kWeightFloor ? v[i] / std::sqrt(w) : 0.0;
        re[i] = c.real();
        im[i] = c.imag();
      }
      members_re.push_back(std::move(re));
      members_im.push_back(std::move(im));
    }
    const double residual = (recon - rho).cwiseAbs().maxCoeff();
    if (residual > 1e-9) {
      throw InvariantError("ensemble fails to reconstruct the input state");
    }
    (*out)["weights"] = weights;
    (*out)["members_re"] = members_re;
    (*out)["members_im"] = members_im;
    (*out)["feasibility_residual"] = residual;
  }

  /// Seed with members equal to the eigenvectors themselves.
  Eigen::VectorXd eigen_seed() const {
    Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(n_, root_.r);
    for (int j = 0; j < root_.r && j < n_; ++j) z(j, j) = 1.0;
    Eigen::VectorXd x(dim());
    pack_matrix(z, x.data());
    return x;
  }

  /// Alternating refinement toward product members: each member is replaced
  /// by its closest product state (leading singular pair of its reshape) and
  /// the family is pulled back to the nearest valid decomposition through
  /// the polar factor of the coefficient matrix. Returns the best parameter
  /// vector visited, by objective value.
  Eigen::VectorXd projected(const Eigen::VectorXd& x, int rounds) const {
    Eigen::MatrixXcd mix = params_to_isometry(x.data(), n_, root_.r);
    Eigen::MatrixXcd t(n_, root_.r);
    Eigen::MatrixXcd vmat(d_a_, d_b_);
    Eigen::VectorXd best = x;
    double best_f = value(x);
    for (int round = 0; round < rounds; ++round) {
      double total = 0.0;
      for (int k = 0; k < n_; ++k) {
        const Eigen::VectorXcd v = root_.scaled * mix.row(k).transpose();
        const double w = v.squaredNorm();
        if (w < kWeightFloor) {
          t.row(k).setZero();
          continue;
        }
        for (int i = 0; i < d_a_; ++i) {
          for (int j = 0; j < d_b_; ++j) vmat(i, j) = v[i * d_b_ + j];
        }
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
            vmat, Eigen::ComputeFullU | Eigen::ComputeFullV);
        for (int s = 0; s < svd.singularValues().size(); ++s) {
          const double p =
              svd.singularValues()[s] * svd.singularValues()[s] / w;
          if (p > kRankFloor) total -= 2.0 * w * p * std::log(p);
        }
        Eigen::VectorXcd target(root_.d);
        for (int i = 0; i < d_a_; ++i) {
          for (int j = 0; j < d_b_; ++j) {
            target[i * d_b_ + j] =
                svd.matrixU()(i, 0) * std::conj(svd.matrixV()(j, 0));
          }
        }
        target *= std::sqrt(w);
        for (int i = 0; i < root_.r; ++i) {
          t(k, i) = root_.vectors.col(i).dot(target) /
                    std::sqrt(root_.values[i]);
        }
      }
      if (total < best_f) {
        best_f = total;
        pack_matrix(mix, best.data());
      }
      Eigen::JacobiSVD<Eigen::MatrixXcd> polar(
          t, Eigen::ComputeThinU | Eigen::ComputeThinV);
      const Eigen::MatrixXcd next =
          polar.matrixU() * polar.matrixV().adjoint();
      const double shift = (next - mix).cwiseAbs().maxCoeff();
      mix = next;
      if (shift < 1e-14) break;
    }
    Eigen::VectorXd last(dim());
    pack_matrix(mix, last.data());
    if (value(last) < best_f) best = last;
    return best;
  }

  /// Seed steering members toward products of the local eigenbases.
  Eigen::VectorXd product_seed(const Eigen::MatrixXcd& rho) const {
    const Eigen::MatrixXcd rho_a = ptrace_second(rho, d_a_, d_b_);
    const Eigen::MatrixXcd rho_b = ptrace_first(rho, d_a_, d_b_);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ea(rho_a);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eb(rho_b);
    Eigen::MatrixXcd z(n_, root_.r);
    for (int k = 0; k < n_; ++k) {
      const int ia = (k / d_b_) % d_a_;
      const int ib = k % d_b_;
      Eigen::VectorXcd t(root_.d);
      for (int i = 0; i < d_a_; ++i) {
        for (int j = 0; j < d_b_; ++j) {
          t[i * d_b_ + j] =
              ea.eigenvectors().col(ia)[i] * eb.eigenvectors().col(ib)[j];
        }
      }
      for (int i = 0; i < root_.r; ++i) {
        z(k, i) = root_.scaled.col(i).dot(t);
      }
    }
    Eigen::VectorXd x(dim());
    pack_matrix(z, x.data());
    return x;
  }

  const SpectralRoot& root() const { return root_; }

 private:
  const SpectralRoot& root_;
  int d_a_;
  int d_b_;
  int n_;
};

opt::MultiStartOptions options_from_budget(const ExtensionBudget& budget) {
  opt::MultiStartOptions options;
  options.restarts = budget.restarts;
  options.iters_per_start = budget.iterations;
  options.known_lower_bound = 0.0;
  options.stop_tol = budget.tolerance;
  options.seed = budget.seed;
  options.polish_rounds = 6;
  options.hop_rounds = 6;
  options.hop_sigma = 0.3;
  return options;
}

double clamp_final(double value, double window) {
  if (value < -window) {
    throw InvariantError("extension search produced a negative objective");
  }
  return std::max(0.0, value);
}

}  // namespace

OptReport quantum_ef_k2(const DensityMatrix& rho_ab,
                        const ExtensionBudget& budget) {
  validate_budget(budget);
  require_bipartite(rho_ab);
  const int d_a = rho_ab.subsystems()[0].dim;
  const int d_b = rho_ab.subsystems()[1].dim;
  const SpectralRoot root = spectral_root(rho_ab);
  const int n_members =
      budget.n_alpha > 0 ? budget.n_alpha : (d_a * d_b) * (d_a * d_b);
  if (n_members < root.r) {
    throw ConfigError("family size below the rank of the state");
  }

  OptReport report;
  report.seed = budget.seed;
  report.bound_direction = BoundDirection::kUpperBoundOfMin;

  PureEnsembleProblem problem(root, d_a, d_b, n_members);
  const opt::Objective objective = [&problem](const Eigen::VectorXd& x) {
    return problem.value(x);
  };

  std::vector<Eigen::VectorXd> seeds;
  seeds.push_back(problem.eigen_seed());
  seeds.push_back(problem.product_seed(rho_ab.matrix()));
  seeds.push_back(problem.projected(seeds[0], kProjectionRounds));
  seeds.push_back(problem.projected(seeds[1], kProjectionRounds));
  {
    std::mt19937_64 eng(budget.seed ^ 0xa02bdbf7bb3c0a7ull);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int s = 0; s < 3; ++s) {
      Eigen::VectorXd x0(problem.dim());
      for (int i = 0; i < x0.size(); ++i) x0[i] = gauss(eng);
      seeds.push_back(problem.projected(x0, kProjectionRounds));
    }
  }

  opt::MultiStartResult best = opt::multistart_minimize(
      objective, problem.dim(), seeds, options_from_budget(budget));

  // The refinement often drops the incumbent onto an exact decomposition;
  // keep it only when it helps, then re-polish locally.
  Eigen::VectorXd refined = problem.projected(best.x, kProjectionRounds);
  const double refined_f = problem.value(refined);
  if (refined_f < best.f) {
    opt::SimplexOptions polish;
    polish.max_iters = budget.iterations;
    polish.init_step = 0.05;
    const opt::SimplexResult res = opt::simplex_minimize(objective, refined,
                                                         polish);
    best.evals += res.evals;
    if (res.f < refined_f) {
      best.x = res.x;
      best.f = res.f;
    } else {
      best.x = std::move(refined);
      best.f = refined_f;
    }
    if (best.f <= budget.tolerance) best.reached_bound = true;
  }

  report.evaluations = best.evals;
  report.converged = best.reached_bound;
  report.best_value = clamp_final(best.f, kQuantumCmiClampWindow);
  report.best_params = {{"family", "k2"}, {"n_members", n_members}};
  problem.describe(best.x, rho_ab.matrix(), &report.best_params);
  return report;
}

namespace {

/// Pure fine ensemble grouped into blocks by a stochastic matrix; the
/// objective is sum_beta w_beta [S(rho_a) + S(rho_b) - S(rho_ab)] over the
/// block states, which equals I(a : b | flag) of the flagged extension.
class GroupedEnsembleProblem {
 public:
  GroupedEnsembleProblem(const SpectralRoot& root, int d_a, int d_b,
                         int n_fine, int n_blocks)
      : root_(root),
        d_a_(d_a),
        d_b_(d_b),
        n_fine_(n_fine),
        n_blocks_(n_blocks) {}

  int iso_dim() const { return 2 * n_fine_ * root_.r; }
  int dim() const { return iso_dim() + n_blocks_ * n_fine_; }

  // Groups columns: grouping[beta * n_fine + alpha] = R(beta | alpha).
  std::vector<double> grouping(const Eigen::VectorXd& x) const {
    std::vector<double> g(static_cast<std::size_t>(n_blocks_) * n_fine_);
    for (int alpha = 0; alpha < n_fine_; ++alpha) {
      double mass = 0.0;
      for (int beta = 0; beta < n_blocks_; ++beta) {
        const double t = x[iso_dim() + beta * n_fine_ + alpha];
        g[beta * n_fine_ + alpha] = t * t;
        mass += t * t;
      }
      if (mass <= 0.0) {
        for (int beta = 0; beta < n_blocks_; ++beta) {
          g[beta * n_fine_ + alpha] = 1.0 / n_blocks_;
        }
      } else {
        for (int beta = 0; beta < n_blocks_; ++beta) {
          g[beta * n_fine_ + alpha] /= mass;
        }
      }
    }
    return g;
  }

  double value(const Eigen::VectorXd& x) const {
    const Eigen::MatrixXcd mix =
        params_to_isometry(x.data(), n_fine_, root_.r);
    std::vector<Eigen::VectorXcd> fine;
    fine.reserve(n_fine_);
    for (int k = 0; k < n_fine_; ++k) {
      fine.push_back(root_.scaled * mix.row(k).transpose());
    }
    const std::vector<double> g = grouping(x);
    double total = 0.0;
    for (int beta = 0; beta < n_blocks_; ++beta) {
      Eigen::MatrixXcd block =
          Eigen::MatrixXcd::Zero(root_.d, root_.d);
      for (int alpha = 0; alpha < n_fine_; ++alpha) {
        const double r = g[beta * n_fine_ + alpha];
        if (r > 0.0) block += r * (fine[alpha] * fine[alpha].adjoint());
      }
      const double w = block.trace().real();
      if (w < kWeightFloor) continue;
      block /= w;
      const double s_a =
          von_neumann_entropy(ptrace_second(block, d_a_, d_b_));
      const double s_b = von_neumann_entropy(ptrace_first(block, d_a_, d_b_));
      const double s_ab = von_neumann_entropy(block);
      total += w * (s_a + s_b - s_ab);
    }
    return total;
  }

  /// Identity grouping appended to an isometry seed; blocks reproduce the
  /// fine members, so the objective matches the pure-ensemble value.
  Eigen::VectorXd lift_seed(const Eigen::VectorXd& iso_params) const {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(dim());
    x.head(iso_dim()) = iso_params;
    for (int alpha = 0; alpha < n_fine_; ++alpha) {
      x[iso_dim() + (alpha % n_blocks_) * n_fine_ + alpha] = 1.0;
    }
    return x;
  }

 private:
  const SpectralRoot& root_;
  int d_a_;
  int d_b_;
  int n_fine_;
  int n_blocks_;
};

}  // namespace

OptReport quantum_ef_k1(const DensityMatrix& rho_ab,
                        const ExtensionBudget& budget) {
  validate_budget(budget);
  require_bipartite(rho_ab);
  const int d_a = rho_ab.subsystems()[0].dim;
  const int d_b = rho_ab.subsystems()[1].dim;
  const SpectralRoot root = spectral_root(rho_ab);
  const int n_blocks =
      budget.n_alpha > 0 ? budget.n_alpha : (d_a * d_b) * (d_a * d_b);
  const int n_fine = std::max(n_blocks, root.r);
  if (n_blocks < 1) {
    throw ConfigError("family size below one");
  }

  // The pure-member optimum under the same budget both seeds the search and
  // caps the result.
  ExtensionBudget fine_budget = budget;
  fine_budget.n_alpha = n_fine;
  const OptReport pure_report = quantum_ef_k2(rho_ab, fine_budget);

  OptReport report;
  report.seed = budget.seed;
  report.bound_direction = BoundDirection::kUpperBoundOfMin;

  GroupedEnsembleProblem problem(root, d_a, d_b, n_fine, n_blocks);
  const opt::Objective objective = [&problem](const Eigen::VectorXd& x) {
    return problem.value(x);
  };

  PureEnsembleProblem fine_problem(root, d_a, d_b, n_fine);
  std::vector<Eigen::VectorXd> seeds;
  {
    // Rebuild the winning pure ensemble's parameters from its members.
    Eigen::MatrixXcd z(n_fine, root.r);
    const auto& re = pure_report.best_params.at("members_re");
    const auto& im = pure_report.best_params.at("members_im");
    const auto& w = pure_report.best_params.at("weights");
    for (int k = 0; k < n_fine; ++k) {
      Eigen::VectorXcd v(root.d);
      const double scale = std::sqrt(w[k].get<double>());
      for (int i = 0; i < root.d; ++i) {
        v[i] = scale * std::complex<double>(re[k][i].get<double>(),
                                            im[k][i].get<double>());
      }
      // Coefficients in the scaled eigenbasis recover the isometry row.
      for (int i = 0; i < root.r; ++i) {
        z(k, i) = root.vectors.col(i).dot(v) / std::sqrt(root.values[i]);
      }
    }
    Eigen::VectorXd iso(fine_problem.dim());
    pack_matrix(z, iso.data());
    seeds.push_back(problem.lift_seed(iso));
  }
  seeds.push_back(problem.lift_seed(fine_problem.eigen_seed()));
  seeds.push_back(problem.lift_seed(fine_problem.product_seed(rho_ab.matrix())));

  const opt::MultiStartResult best = opt::multistart_minimize(
      objective, problem.dim(), seeds, options_from_budget(budget));

  report.evaluations = best.evals + pure_report.evaluations;
  report.converged = best.reached_bound;
  report.best_value =
      std::min(clamp_final(best.f, kQuantumCmiClampWindow),
               pure_report.best_value);
  report.best_params = {{"family", "k1"},
                        {"n_blocks", n_blocks},
                        {"n_fine", n_fine},
                        {"pure_member_value", pure_report.best_value},
                        {"grouping", problem.grouping(best.x)}};
  return report;
}

namespace {

/// I(a : b | lambda) of the state obtained from the canonical purification
/// by an isometry from the purifying space into lambda (x) environment,
/// with the environment traced out.
class ChannelExtensionProblem {
 public:
  ChannelExtensionProblem(const SpectralRoot& root, int d_a, int d_b,
                          int dim_lambda, int env_dim)
      : root_(root),
        d_a_(d_a),
        d_b_(d_b),
        l_(dim_lambda),
        k_(env_dim) {}

  int dim() const { return 2 * l_ * k_ * root_.r; }

  double value(const Eigen::VectorXd& x) const {
    const Eigen::MatrixXcd w = params_to_isometry(x.data(), l_ * k_, root_.r);
    const int d = root_.d;
    // Pure state on (a, b, lambda, env) reshaped with the environment as
    // columns; the reduced state on (a, b, lambda) is then phi phi^dagger.
    Eigen::MatrixXcd phi = Eigen::MatrixXcd::Zero(d * l_, k_);
    for (int l = 0; l < l_; ++l) {
      for (int k = 0; k < k_; ++k) {
        const Eigen::VectorXcd col =
            root_.scaled * w.row(l * k_ + k).transpose();
        for (int xx = 0; xx < d; ++xx) {
          phi(xx * l_ + l, k) = col[xx];
        }
      }
    }
    const Eigen::MatrixXcd rho_abl = phi * phi.adjoint();

    Eigen::MatrixXcd rho_l = Eigen::MatrixXcd::Zero(l_, l_);
    for (int l1 = 0; l1 < l_; ++l1) {
      for (int l2 = 0; l2 < l_; ++l2) {
        for (int xx = 0; xx < d; ++xx) {
          rho_l(l1, l2) += rho_abl(xx * l_ + l1, xx * l_ + l2);
        }
      }
    }
    Eigen::MatrixXcd rho_al = Eigen::MatrixXcd::Zero(d_a_ * l_, d_a_ * l_);
    Eigen::MatrixXcd rho_bl = Eigen::MatrixXcd::Zero(d_b_ * l_, d_b_ * l_);
    for (int ia = 0; ia < d_a_; ++ia) {
      for (int ja = 0; ja < d_a_; ++ja) {
        for (int ib = 0; ib < d_b_; ++ib) {
          for (int jb = 0; jb < d_b_; ++jb) {
            for (int l1 = 0; l1 < l_; ++l1) {
              for (int l2 = 0; l2 < l_; ++l2) {
                const auto v = rho_abl((ia * d_b_ + ib) * l_ + l1,
                                       (ja * d_b_ + jb) * l_ + l2);
                if (ib == jb) rho_al(ia * l_ + l1, ja * l_ + l2) += v;
                if (ia == ja) rho_bl(ib * l_ + l1, jb * l_ + l2) += v;
              }
            }
          }
        }
      }
    }
    return von_neumann_entropy(rho_al) + von_neumann_entropy(rho_bl) -
           von_neumann_entropy(rho_l) - von_neumann_entropy(rho_abl);
  }

  /// Channel discarding to a fixed lambda level: reproduces the plain
  /// mutual information.
  Eigen::VectorXd discard_seed() const {
    Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(l_ * k_, root_.r);
    for (int i = 0; i < root_.r; ++i) z(i % k_, i) = 1.0;
    Eigen::VectorXd x(dim());
    pack_matrix(z, x.data());
    return x;
  }

  /// Measure the purifying index and coarse-grain it onto lambda
  /// round-robin, with a distinct environment level per member.
  Eigen::VectorXd measure_seed() const {
    Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(l_ * k_, root_.r);
    for (int i = 0; i < root_.r; ++i) {
      z((i % l_) * k_ + (i / l_), i) = 1.0;
    }
    Eigen::VectorXd x(dim());
    pack_matrix(z, x.data());
    return x;
  }

 private:
  const SpectralRoot& root_;
  int d_a_;
  int d_b_;
  int l_;
  int k_;
};

}  // namespace

OptReport quantum_ef_k0_bounded(const DensityMatrix& rho_ab, int dim_lambda,
                                const ExtensionBudget& budget) {
  validate_budget(budget);
  require_bipartite(rho_ab);
  if (dim_lambda < 1) {
    throw ConfigError("conditioning dimension must be positive");
  }
  const int d_a = rho_ab.subsystems()[0].dim;
  const int d_b = rho_ab.subsystems()[1].dim;

  OptReport report;
  report.seed = budget.seed;
  report.bound_direction = BoundDirection::kUpperBoundOfMin;

  if (dim_lambda == 1) {
    report.best_value = quantum_mutual_information(
        rho_ab, {rho_ab.subsystems()[0].name}, {rho_ab.subsystems()[1].name});
    report.best_params = {{"family", "k0"},
                          {"dim_lambda", 1},
                          {"exact", "trivial conditioning system"}};
    report.converged = true;
    return report;
  }

  const SpectralRoot root = spectral_root(rho_ab);
  const int env_dim = budget.env_dim > 0 ? budget.env_dim : root.r;
  if (dim_lambda * env_dim < root.r) {
    throw ConfigError(
        "conditioning times environment dimension below the state rank");
  }

  ChannelExtensionProblem problem(root, d_a, d_b, dim_lambda, env_dim);
  const opt::Objective objective = [&problem](const Eigen::VectorXd& x) {
    return problem.value(x);
  };

  std::vector<Eigen::VectorXd> seeds;
  if (env_dim >= root.r) seeds.push_back(problem.discard_seed());
  seeds.push_back(problem.measure_seed());

  const opt::MultiStartResult best = opt::multistart_minimize(
      objective, problem.dim(), seeds, options_from_budget(budget));

  report.evaluations = best.evals;
  report.converged = best.reached_bound;
  report.best_value = clamp_final(best.f, kQuantumCmiClampWindow);
  std::vector<double> raw(best.x.data(), best.x.data() + best.x.size());
  report.best_params = {{"family", "k0"},
                        {"dim_lambda", dim_lambda},
                        {"env_dim", env_dim},
                        {"isometry_params", raw}};
  return report;
}

}  // namespace entcmi
