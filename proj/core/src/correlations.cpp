// Copyright 2026 The symmcert authors
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

#include "symmcert/correlations.hpp"

#include <stdexcept>

namespace symmcert {

Eigen::MatrixXd correlation_matrix(const SymmetricTensor& tensor, int r) {
  const int n = tensor.rank();
  if (r < 1 || 2 * r > n) {
    throw std::domain_error("correlation_matrix: group size must satisfy 1 <= r <= N/2");
  }
  const Eigen::Index dim = Eigen::Index(1) << (2 * r);
  std::vector<std::array<int, 4>> counts(static_cast<std::size_t>(dim));
  std::vector<double> first_moments(static_cast<std::size_t>(dim));
  for (Eigen::Index mu = 0; mu < dim; ++mu) {
    counts[static_cast<std::size_t>(mu)] = base4_counts(mu, r);
    std::array<int, 4> padded = counts[static_cast<std::size_t>(mu)];
    padded[0] += n - r;
    first_moments[static_cast<std::size_t>(mu)] = tensor.at(padded);
  }
  Eigen::MatrixXd out(dim, dim);
  for (Eigen::Index mu = 0; mu < dim; ++mu) {
    for (Eigen::Index nu = 0; nu < dim; ++nu) {
      std::array<int, 4> key = counts[static_cast<std::size_t>(mu)];
      for (int i = 0; i < 4; ++i) key[static_cast<std::size_t>(i)] += counts[static_cast<std::size_t>(nu)][static_cast<std::size_t>(i)];
      key[0] += n - 2 * r;
      out(mu, nu) = tensor.at(key) - first_moments[static_cast<std::size_t>(mu)] *
                                         first_moments[static_cast<std::size_t>(nu)];
    }
  }
  return out;
}

Eigen::MatrixXd schur_block(const Eigen::MatrixXd& correlation) {
  if (correlation.rows() != correlation.cols() || correlation.rows() < 2) {
    throw std::domain_error("schur_block: malformed correlation matrix");
  }
  const Eigen::Index d = correlation.rows() - 1;
  return correlation.bottomRightCorner(d, d);
}

Eigen::MatrixXd reduced_block_extract(const Eigen::MatrixXcd& t_equal,
                                      int num_qubits, int r) {
  if (num_qubits % 2 != 0) {
    throw std::domain_error("reduced_block_extract: needs an even qubit count");
  }
  const int j = num_qubits / 2;
  if (r < 1 || r > j) {
    throw std::domain_error("reduced_block_extract: block size out of range");
  }
  const Eigen::Index dim = Eigen::Index(1) << num_qubits;
  if (t_equal.rows() != dim || t_equal.cols() != dim) {
    throw std::domain_error("reduced_block_extract: matrix size is not 4^j");
  }
  const Eigen::Index block = Eigen::Index(1) << (2 * r);
  const Eigen::MatrixXcd sub = t_equal.topLeftCorner(block, block);
  if (sub.imag().cwiseAbs().maxCoeff() > kHermitianTol) {
    throw std::runtime_error("reduced_block_extract: block is not real");
  }
  return sub.real();
}

SchurEquivalence schur_equivalence_check(const DensityMatrix& rho, int r,
                                         double tolerance) {
  const int n = rho.qubit_count();
  if (r < 1 || 2 * r > n) {
    throw std::domain_error("schur_equivalence_check: group size out of range");
  }
  const SymmetricTensor x = tensor_from_state(rho);
  const SymmetricTensor reduced = partial_trace_tensor(x, 2 * r);
  const Eigen::MatrixXcd t_reduced = t_matrix(reduced, r);

  SchurEquivalence result;
  result.block_min_eigenvalue = min_hermitian_eigenvalue(t_reduced);
  const Eigen::MatrixXd s = schur_block(correlation_matrix(x, r));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      0.5 * (s + s.transpose()), Eigen::EigenvaluesOnly);
  result.correlation_min_eigenvalue = solver.eigenvalues().minCoeff();
  result.block_pass = result.block_min_eigenvalue >= -tolerance;
  result.correlation_pass = result.correlation_min_eigenvalue >= -tolerance;
  result.agree = (result.block_pass == result.correlation_pass);
  return result;
}

}  // namespace symmcert
