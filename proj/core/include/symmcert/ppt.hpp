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

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "symmcert/states.hpp"
#include "symmcert/tensor.hpp"

namespace symmcert {

/// Default pass/fail slack on minimum eigenvalues. Coherent states sit
/// exactly at eigenvalue 0, so the verdict needs room for solver noise.
inline constexpr double kCriterionTol = 1e-10;

/**
 * Transpose of the last `transposed` qubit factors of a 2^N x 2^N operator in
 * the computational basis (qubit 1 = most significant bit, so the transposed
 * qubits are the low bits). Involutive, trace- and Hermiticity-preserving.
 */
Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd& op, int num_qubits,
                                   int transposed);

/**
 * The 2^N x 2^N unitary R^(r): rows are computational indices a_1..a_N,
 * columns are (mu_1..mu_r, i_1..i_{N-2r}) with mu base-4 lexicographic and
 * mu-major. Entry = 2^{-r/2} * prod_k delta(a_k, i_k) for k <= N-2r times
 * prod_k sigma^{mu_k}(a_{N-2r+k}, a_{N-r+k}): the deltas take the first
 * N-2r qubit indices, each Pauli pairs index k with k+r.
 */
Eigen::MatrixXcd r_matrix(int num_qubits, int r);

/**
 * The 2^N x 2^N matrix T^(r) of tensor entries: block (mu, nu) of size
 * 2^{N-2r} holds sum_tau X_{tau... mu... nu...} sigma^{tau_1} x ... over the
 * N-2r hidden indices. For r = N/2 this is the plain entry matrix
 * T(mu,nu) = X_{mu nu}. Row/column layout matches r_matrix. Hermitian, and
 * real symmetric for the equal bipartition.
 */
Eigen::MatrixXcd t_matrix(const SymmetricTensor& tensor, int r);

/// lambda in R^dagger rho^PT R = lambda T^(r), i.e. 1/2^{N-r}.
double similarity_factor(int num_qubits, int r);

/**
 * Max-norm residual of R^dagger rho^PT R - lambda T^(r), with rho^PT the
 * partial transpose of the embedded state over the last r qubits. The two
 * sides come from independent routes (computational-basis transpose vs tensor
 * rearrangement); a correct state keeps this below 1e-11.
 */
double similarity_residual(const DensityMatrix& rho, int r);

/**
 * Max violation of 1/4 sum_{tau,tau'} y(tau,tau') tr(s^mu s^tau s^nu s^tau')
 * = y(mu,nu) for a real symmetric y with y11+y22+y33 = y00. Requires the
 * trace condition within 1e-12.
 */
double trace_identity_check(const Eigen::Matrix4d& y);

/// Minimum eigenvalue of (M + M^dagger)/2.
double min_hermitian_eigenvalue(const Eigen::MatrixXcd& m);

struct CriterionResult {
  int r;
  double lambda;
  double min_eigenvalue;
  bool pass;
  std::optional<double> similarity_residual;
};

struct CriterionReport {
  int qubit_count = 0;
  double tolerance = kCriterionTol;
  bool sufficient = false;  // PPT is sufficient only for N in {2,3}
  std::vector<CriterionResult> results;

  bool all_pass() const;
};

struct CriteriaOptions {
  double tolerance = kCriterionTol;
  bool with_similarity = false;
};

/**
 * Evaluates T^(r) >= 0 for every bipartition r in 1..floor(N/2): minimum
 * eigenvalue, verdict at the tolerance, lambda, and (optionally) the
 * similarity residual per r. N = 1 yields an empty report.
 */
CriterionReport evaluate_criteria(const DensityMatrix& rho,
                                  const CriteriaOptions& options = {});

}  // namespace symmcert
