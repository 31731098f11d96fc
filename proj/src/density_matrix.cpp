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
#include "entcmi/density_matrix.hpp"

#include <random>
#include <stdexcept>
#include <unordered_set>

#include "entcmi/errors.hpp"

namespace entcmi {

namespace {

void validate_subsystems(const std::vector<Subsystem>& subs) {
  if (subs.empty()) {
    throw std::invalid_argument("density matrix requires subsystems");
  }
  std::unordered_set<std::string> seen;
  for (const Subsystem& s : subs) {
    if (s.name.empty()) {
      throw std::invalid_argument("subsystem name must be non-empty");
    }
    if (s.dim <= 0) {
      throw std::invalid_argument("subsystem '" + s.name +
                                  "' must have positive dimension");
    }
    if (!seen.insert(s.name).second) {
      throw std::invalid_argument("duplicate subsystem name '" + s.name +
                                  "'");
    }
  }
}

int total_dim(const std::vector<Subsystem>& subs) {
  long long d = 1;
  for (const Subsystem& s : subs) d *= s.dim;
  return static_cast<int>(d);
}

}  // namespace

DensityMatrix::DensityMatrix(std::vector<Subsystem> subsystems,
                             Eigen::MatrixXcd matrix)
    : subs_(std::move(subsystems)), m_(std::move(matrix)) {
  validate_subsystems(subs_);
  const int d = total_dim(subs_);
  if (m_.rows() != d || m_.cols() != d) {
    throw InvariantError("density matrix dimension does not match subsystems");
  }
  const double herm_dev = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kHermTolerance) {
    throw InvariantError("density matrix is not Hermitian within tolerance");
  }
  m_ = 0.5 * (m_ + m_.adjoint().eval());
  const double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    throw InvariantError("density matrix trace deviates from one");
  }
  m_ /= tr;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_,
                                                     Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kPsdTolerance) {
    throw InvariantError("density matrix has a negative eigenvalue");
  }
}

int DensityMatrix::sub_index(std::string_view name) const {
  for (std::size_t i = 0; i < subs_.size(); ++i) {
    if (subs_[i].name == name) return static_cast<int>(i);
  }
  throw std::invalid_argument("unknown subsystem '" + std::string(name) +
                              "'");
}

bool DensityMatrix::has_subsystem(std::string_view name) const {
  for (const Subsystem& s : subs_) {
    if (s.name == name) return true;
  }
  return false;
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<std::string>& keep) {
  const auto& subs = rho.subsystems();
  const int n = static_cast<int>(subs.size());

  std::vector<int> keep_pos;
  std::vector<bool> kept(n, false);
  for (const std::string& name : keep) {
    const int i = rho.sub_index(name);
    if (kept[i]) {
      throw std::invalid_argument("subsystem '" + name + "' kept twice");
    }
    kept[i] = true;
    keep_pos.push_back(i);
  }
  if (keep_pos.empty()) {
    throw std::invalid_argument("partial trace must keep a subsystem");
  }

  std::vector<int> trace_pos;
  for (int i = 0; i < n; ++i) {
    if (!kept[i]) trace_pos.push_back(i);
  }

  // Strides of each subsystem index in the composite basis.
  std::vector<long long> stride(n, 1);
  for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * subs[i + 1].dim;

  std::vector<Subsystem> out_subs;
  long long keep_dim = 1;
  for (int i : keep_pos) {
    out_subs.push_back(subs[i]);
    keep_dim *= subs[i].dim;
  }
  long long trace_dim = 1;
  for (int i : trace_pos) trace_dim *= subs[i].dim;

  // Composite index of a (keep multi-index, trace multi-index) pair.
  const auto compose = [&](long long k, long long t) {
    long long lin = 0;
    for (int p = static_cast<int>(keep_pos.size()) - 1; p >= 0; --p) {
      const int i = keep_pos[p];
      lin += (k % subs[i].dim) * stride[i];
      k /= subs[i].dim;
    }
    for (int p = static_cast<int>(trace_pos.size()) - 1; p >= 0; --p) {
      const int i = trace_pos[p];
      lin += (t % subs[i].dim) * stride[i];
      t /= subs[i].dim;
    }
    return lin;
  };

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(keep_dim, keep_dim);
  for (long long r = 0; r < keep_dim; ++r) {
    for (long long c = 0; c < keep_dim; ++c) {
      std::complex<double> sum = 0.0;
      for (long long t = 0; t < trace_dim; ++t) {
        sum += rho.matrix()(compose(r, t), compose(c, t));
      }
      out(r, c) = sum;
    }
  }
  return DensityMatrix(std::move(out_subs), std::move(out));
}

DensityMatrix tensor(const DensityMatrix& x, const DensityMatrix& y) {
  std::vector<Subsystem> subs = x.subsystems();
  subs.insert(subs.end(), y.subsystems().begin(), y.subsystems().end());
  validate_subsystems(subs);
  const auto& a = x.matrix();
  const auto& b = y.matrix();
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return DensityMatrix(std::move(subs), std::move(out));
}

DensityMatrix random_density_matrix(std::uint64_t seed,
                                    std::vector<Subsystem> subsystems,
                                    int rank) {
  validate_subsystems(subsystems);
  const int d = total_dim(subsystems);
  if (rank <= 0 || rank > d) rank = d;
  std::mt19937_64 eng(seed);
  std::normal_distribution<double> norm(0.0, 1.0);
  Eigen::MatrixXcd g(d, rank);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < rank; ++j) {
      const double re = norm(eng);
      const double im = norm(eng);
      g(i, j) = std::complex<double>(re, im);
    }
  }
  Eigen::MatrixXcd m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix(std::move(subsystems), std::move(m));
}

}  // namespace entcmi
