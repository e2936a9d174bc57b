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

#include "symmcert/tensor.hpp"

#include <cmath>
#include <stdexcept>

#include "symmcert/symmetric_space.hpp"

namespace symmcert {

DensityMatrix::DensityMatrix(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 2) {
    throw std::invalid_argument("DensityMatrix: needs a square matrix of dim >= 2");
  }
  num_qubits_ = static_cast<int>(matrix_.rows()) - 1;
  const double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol) {
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTol) {
    throw std::invalid_argument("DensityMatrix: trace is not 1");
  }
  matrix_ = 0.5 * (matrix_ + matrix_.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix_,
                                                         Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kPsdSlack) {
    throw std::invalid_argument("DensityMatrix: matrix is not positive semidefinite");
  }
}

SymmetricTensor::SymmetricTensor(int rank) : rank_(rank) {
  if (rank_ < 1) {
    throw std::domain_error("SymmetricTensor: rank must be >= 1");
  }
  const int w = rank_ + 1;
  lookup_.assign(static_cast<std::size_t>(w) * w * w, -1);
  for (int k1 = 0; k1 <= rank_; ++k1) {
    for (int k2 = 0; k2 + k1 <= rank_; ++k2) {
      for (int k3 = 0; k3 + k2 + k1 <= rank_; ++k3) {
        const int k0 = rank_ - k1 - k2 - k3;
        lookup_[static_cast<std::size_t>((k1 * w + k2) * w + k3)] =
            static_cast<int>(keys_.size());
        keys_.push_back({k0, k1, k2, k3});
      }
    }
  }
  values_.assign(keys_.size(), 0.0);
}

std::size_t SymmetricTensor::slot(const std::array<int, 4>& counts) const {
  const int w = rank_ + 1;
  if (counts[0] < 0 || counts[1] < 0 || counts[2] < 0 || counts[3] < 0 ||
      counts[0] + counts[1] + counts[2] + counts[3] != rank_) {
    throw std::domain_error("SymmetricTensor: multiset key does not match rank");
  }
  const int idx = lookup_[static_cast<std::size_t>((counts[1] * w + counts[2]) * w + counts[3])];
  return static_cast<std::size_t>(idx);
}

double SymmetricTensor::at(const std::array<int, 4>& counts) const {
  return values_[slot(counts)];
}

void SymmetricTensor::set(const std::array<int, 4>& counts, double value) {
  values_[slot(counts)] = value;
}

SymmetricTensor tensor_from_state(const DensityMatrix& rho) {
  const int n = rho.qubit_count();
  SymmetricTensor x(n);
  for (const auto& key : x.multisets()) {
    const SOperator s = s_operator(MultiIndex::from_counts(key));
    const Complex value = (rho.matrix() * s.matrix).trace();
    if (std::abs(value.imag()) > kImagErrorTol) {
      throw std::runtime_error(
          "tensor_from_state: tensor entry has a non-negligible imaginary part");
    }
    x.set(key, value.real());
  }
  return x;
}

DensityMatrix state_from_tensor(const SymmetricTensor& tensor) {
  const int n = tensor.rank();
  const std::array<int, 4> zeros{n, 0, 0, 0};
  if (std::abs(tensor.at(zeros) - 1.0) > kTraceTol) {
    throw std::invalid_argument("state_from_tensor: tensor is not normalized");
  }
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  for (const auto& key : tensor.multisets()) {
    const double weight = multinomial(key) * tensor.at(key);
    if (weight == 0.0) continue;
    rho += weight * s_operator(MultiIndex::from_counts(key)).matrix;
  }
  rho /= std::pow(2.0, n);
  rho = 0.5 * (rho + rho.adjoint().eval());
  return DensityMatrix(std::move(rho));
}

double contraction_check(const SymmetricTensor& tensor) {
  const int n = tensor.rank();
  if (n < 2) {
    throw std::domain_error("contraction_check: rank must be >= 2");
  }
  double worst = 0.0;
  SymmetricTensor trailing(n >= 3 ? n - 2 : 1);
  if (n == 2) {
    double sum = 0.0;
    for (int a = 1; a <= 3; ++a) {
      std::array<int, 4> key{0, 0, 0, 0};
      key[static_cast<std::size_t>(a)] = 2;
      sum += tensor.at(key);
    }
    return std::abs(sum - tensor.at({2, 0, 0, 0}));
  }
  for (const auto& rest : trailing.multisets()) {
    double sum = 0.0;
    for (int a = 1; a <= 3; ++a) {
      std::array<int, 4> key = rest;
      key[static_cast<std::size_t>(a)] += 2;
      sum += tensor.at(key);
    }
    std::array<int, 4> zero_key = rest;
    zero_key[0] += 2;
    worst = std::max(worst, std::abs(sum - tensor.at(zero_key)));
  }
  return worst;
}

SymmetricTensor partial_trace_tensor(const SymmetricTensor& tensor, int keep) {
  const int n = tensor.rank();
  if (keep < 1 || keep > n) {
    throw std::domain_error("partial_trace_tensor: kept rank out of range");
  }
  SymmetricTensor reduced(keep);
  for (const auto& key : reduced.multisets()) {
    std::array<int, 4> source = key;
    source[0] += n - keep;
    reduced.set(key, tensor.at(source));
  }
  return reduced;
}

}  // namespace symmcert
