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

#include <Eigen/Dense>

#include "symmcert/ppt.hpp"
#include "symmcert/tensor.hpp"

namespace symmcert {

/**
 * Correlation matrix C^(r) of a rank-N tensor, size 4^r x 4^r:
 * C(mu,nu) = X_{mu nu 0...} - X_{mu 0...} X_{nu 0...}. Real symmetric with an
 * identically zero first row and column (the 0...0 slot).
 */
Eigen::MatrixXd correlation_matrix(const SymmetricTensor& tensor, int r);

/// Lower-right (4^r - 1) block of C^(r): the Schur complement of the
/// upper-left 4^r block of T with respect to its unit corner entry.
Eigen::MatrixXd schur_block(const Eigen::MatrixXd& correlation);

/**
 * Upper-left 4^r x 4^r block of an equal-bipartition T matrix (N even).
 * Coincides with the T matrix of the reduced spin-r state, i.e. with
 * t_matrix(partial_trace_tensor(X, 2r), r).
 */
Eigen::MatrixXd reduced_block_extract(const Eigen::MatrixXcd& t_equal,
                                      int num_qubits, int r);

struct SchurEquivalence {
  bool block_pass;       // T matrix of the reduced 2r-qubit state is PSD
  bool correlation_pass; // S^(r) of the full tensor is PSD
  bool agree;
  double block_min_eigenvalue;
  double correlation_min_eigenvalue;
};

/**
 * Runs both sides of the Schur-complement equivalence: the PSD verdict of the
 * reduced state's T matrix against the PSD verdict of S^(r). The verdicts
 * agree whenever both minimum eigenvalues sit away from the tolerance band
 * (positivity is preserved by Schur complementation, spectra are not).
 */
SchurEquivalence schur_equivalence_check(const DensityMatrix& rho, int r,
                                         double tolerance = kCriterionTol);

}  // namespace symmcert
