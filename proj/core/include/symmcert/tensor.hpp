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

#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "symmcert/pauli.hpp"

namespace symmcert {

// Validation tolerances for density matrices and tensor construction.
// eigensolver noise on dense matrices of dimension <= 1024 stays well below
// these.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdSlack = 1e-10;
inline constexpr double kImagDropTol = 1e-12;
inline constexpr double kImagErrorTol = 1e-9;

/**
 * Density matrix of a spin-j state in the Dicke basis, N = 2j qubits, size
 * (N+1)x(N+1). Construction validates Hermiticity (1e-12), unit trace (1e-12)
 * and positive semidefiniteness (min eigenvalue >= -1e-10) and throws
 * std::invalid_argument on violation.
 */
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd matrix);

  int qubit_count() const { return num_qubits_; }
  int dim() const { return num_qubits_ + 1; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

 private:
  Eigen::MatrixXcd matrix_;
  int num_qubits_;
};

/**
 * Real fully symmetric rank-N tensor over the index alphabet {0,1,2,3},
 * stored compactly by multiset key (k0,k1,k2,k3) with k0+k1+k2+k3 = N:
 * C(N+3,3) values instead of 4^N. Expansion to full indices carries the
 * multinomial multiplicity N!/(k0!k1!k2!k3!).
 */
class SymmetricTensor {
 public:
  explicit SymmetricTensor(int rank);

  int rank() const { return rank_; }
  std::size_t size() const { return values_.size(); }

  double at(const std::array<int, 4>& counts) const;
  void set(const std::array<int, 4>& counts, double value);

  /// All multiset keys of this rank in a fixed lexicographic order.
  const std::vector<std::array<int, 4>>& multisets() const { return keys_; }

 private:
  std::size_t slot(const std::array<int, 4>& counts) const;

  int rank_;
  std::vector<double> values_;
  std::vector<std::array<int, 4>> keys_;
  std::vector<int> lookup_;  // packed (k1,k2,k3) -> slot
};

/**
 * Tensor entries X = tr(rho S) over all index multisets. Entries of a valid
 * state are real; an imaginary residue above 1e-9 throws std::runtime_error.
 */
SymmetricTensor tensor_from_state(const DensityMatrix& rho);

/**
 * Reconstructs rho = 2^-N sum X S over all 4^N full indices, evaluated as a
 * multiplicity-weighted sum over multisets. Requires X normalized (value 1 at
 * the all-zero key). Round-trips tensor_from_state to 1e-12.
 */
DensityMatrix state_from_tensor(const SymmetricTensor& tensor);

/**
 * Max violation of the contraction property sum_a X_{a a ...} = X_{0 0 ...}
 * over all trailing multisets. Valid tensors stay below 1e-12. Requires
 * rank >= 2.
 */
double contraction_check(const SymmetricTensor& tensor);

/**
 * Tensor of the reduced symmetric state on `keep` qubits: the value at
 * (k0,k1,k2,k3) is the rank-N value at (k0 + N - keep, k1, k2, k3).
 */
SymmetricTensor partial_trace_tensor(const SymmetricTensor& tensor, int keep);

}  // namespace symmcert
