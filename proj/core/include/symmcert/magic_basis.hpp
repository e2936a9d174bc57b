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

#include <vector>

#include <Eigen/Dense>

#include "symmcert/pauli.hpp"

namespace symmcert {

enum class BasisConvention {
  RawR,       // columns of R^(N/2) as-is: column mu holds sigma^mu entries
  BellTilde,  // sigma^2 factors replaced by i sigma^2: the Bell-state family
  Magic,      // extra phases making the concurrence |sum alpha_i^2| exact
};

/**
 * Orthonormal family of 2^N maximally entangled vectors across the equal
 * bipartition, labelled by the (mu_1..mu_{N/2}) column multi-indices of
 * R^(N/2). Supported for N in {2, 4}; the magic phase rules are specific to
 * those sizes.
 */
struct BasisFamily {
  int qubit_count;
  BasisConvention convention;
  Eigen::MatrixXcd vectors;              // 2^N x 2^N, one vector per column
  std::vector<std::vector<int>> labels;  // base-4 digits per column
};

BasisFamily basis_family(int num_qubits, BasisConvention convention);

/**
 * Two-qubit concurrence |sum_i alpha_i^2| with alpha the coefficients of psi
 * in the magic family. Matches wootters_oracle to 1e-10. psi must be unit
 * norm within 1e-10.
 */
double concurrence_magic(const Eigen::VectorXcd& psi);

/// Four-qubit generalized concurrence |sum_i alpha_i^2| in the N=4 magic family.
double generalized_concurrence_magic(const Eigen::VectorXcd& psi);

/// Independent check: |<psi| sigma_y x sigma_y |psi*>| for a pure two-qubit state.
double wootters_oracle(const Eigen::VectorXcd& psi);

}  // namespace symmcert
