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

#include <Eigen/Dense>

#include "symmcert/pauli.hpp"

namespace symmcert {

/// Largest qubit count for which 2^N objects are materialized. Dense desk
/// scale; callers wanting more need a different representation anyway.
inline constexpr int kMaxEmbeddedQubits = 20;

double binomial(int n, int k);
double multinomial(const std::array<int, 4>& counts);

/**
 * Dicke state with `excitations` qubits in |1> on `num_qubits` qubits, as a
 * 2^N amplitude vector: the unit-norm equal superposition of all basis states
 * whose index has exactly k set bits. Qubit 1 is the most significant bit.
 */
Eigen::VectorXcd dicke_state(int num_qubits, int excitations);

/**
 * Isometry from the (N+1)-dimensional symmetric (Dicke) space into the 2^N
 * computational space. Column k is dicke_state(N, k); P^dagger P = I_{N+1}.
 */
Eigen::MatrixXcd symmetric_isometry(int num_qubits);

struct SOperator {
  Eigen::MatrixXcd matrix;  // (N+1) x (N+1), Hermitian
  MultiIndex index;
};

/**
 * Projection P^dagger (sigma^{mu_1} x ... x sigma^{mu_N}) P of a Pauli tensor
 * product onto the symmetric subspace. Depends only on the multiset of the
 * index; the all-zero index gives the (N+1)x(N+1) identity.
 */
SOperator s_operator(const MultiIndex& index);

/// Applies sigma^{mu_1} x ... x sigma^{mu_N} to a 2^N vector in O(2^N N).
Eigen::VectorXcd apply_pauli_string(const std::vector<int>& mu,
                                    const Eigen::VectorXcd& v);

}  // namespace symmcert
