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

#include "symmcert/ppt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "symmcert/symmetric_space.hpp"

namespace symmcert {

namespace {

void check_bipartition(int num_qubits, int r) {
  if (num_qubits < 2 || num_qubits > kMaxEmbeddedQubits) {
    throw std::domain_error("qubit count out of supported range");
  }
  if (r < 1 || 2 * r > num_qubits) {
    throw std::domain_error("bipartition size must satisfy 1 <= r <= N/2");
  }
}

// Accumulates the sum of sigma^{tau_1} x ... x sigma^{tau_m} over all distinct
// arrangements of the multiset `counts` into `out` (2^m x 2^m). Each term has
// one nonzero per row, so a term costs O(2^m).
void add_pauli_symmetrized(const std::array<int, 4>& counts,
                           Eigen::MatrixXcd& out) {
  std::vector<int> tau;
  for (int mu = 0; mu < 4; ++mu) {
    tau.insert(tau.end(), static_cast<std::size_t>(counts[static_cast<std::size_t>(mu)]), mu);
  }
  const int m = static_cast<int>(tau.size());
  const Eigen::Index dim = Eigen::Index(1) << m;
  const Complex i_unit(0.0, 1.0);
  do {
    for (Eigen::Index row = 0; row < dim; ++row) {
      Complex value(1.0, 0.0);
      Eigen::Index col = 0;
      for (int k = 0; k < m; ++k) {
        const int bit = static_cast<int>((row >> (m - 1 - k)) & 1);
        switch (tau[static_cast<std::size_t>(k)]) {
          case 0:
            col |= Eigen::Index(bit) << (m - 1 - k);
            break;
          case 1:
            col |= Eigen::Index(1 - bit) << (m - 1 - k);
            break;
          case 2:
            col |= Eigen::Index(1 - bit) << (m - 1 - k);
            value *= bit ? i_unit : -i_unit;  // sigma_y(0,1) = -i, (1,0) = i
            break;
          default:
            col |= Eigen::Index(bit) << (m - 1 - k);
            if (bit) value = -value;
            break;
        }
      }
      out(row, col) += value;
    }
  } while (std::next_permutation(tau.begin(), tau.end()));
}

}  // namespace

Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd& op, int num_qubits,
                                   int transposed) {
  if (num_qubits < 1 || num_qubits > kMaxEmbeddedQubits) {
    throw std::domain_error("partial_transpose: qubit count out of range");
  }
  const Eigen::Index dim = Eigen::Index(1) << num_qubits;
  if (op.rows() != dim || op.cols() != dim) {
    throw std::domain_error("partial_transpose: operator size is not 2^N");
  }
  if (transposed < 0 || transposed > num_qubits) {
    throw std::domain_error("partial_transpose: subsystem size out of range");
  }
  const Eigen::Index mask = (Eigen::Index(1) << transposed) - 1;
  Eigen::MatrixXcd out(dim, dim);
  for (Eigen::Index row = 0; row < dim; ++row) {
    for (Eigen::Index col = 0; col < dim; ++col) {
      out(row, col) = op((row & ~mask) | (col & mask), (col & ~mask) | (row & mask));
    }
  }
  return out;
}

Eigen::MatrixXcd r_matrix(int num_qubits, int r) {
  check_bipartition(num_qubits, r);
  const int n = num_qubits;
  const int m = n - 2 * r;
  const Eigen::Index dim = Eigen::Index(1) << n;
  const Eigen::Index block = Eigen::Index(1) << m;
  const double norm = std::pow(2.0, -0.5 * r);

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index a = 0; a < dim; ++a) {
    // Kronecker deltas fix i_k = a_k for the first m qubits.
    const Eigen::Index i_lex = a >> (2 * r);
    for (long mu_lex = 0; mu_lex < (Eigen::Index(1) << (2 * r)); ++mu_lex) {
      Complex value(norm, 0.0);
      for (int k = 1; k <= r; ++k) {
        const int mu_k = static_cast<int>((mu_lex >> (2 * (r - k))) & 3);
        const int row_bit = static_cast<int>((a >> (n - (m + k))) & 1);
        const int col_bit = static_cast<int>((a >> (n - (m + r + k))) & 1);
        value *= pauli_matrix(mu_k)(row_bit, col_bit);
        if (value == Complex(0.0, 0.0)) break;
      }
      if (value != Complex(0.0, 0.0)) {
        out(a, mu_lex * block + i_lex) = value;
      }
    }
  }
  return out;
}

Eigen::MatrixXcd t_matrix(const SymmetricTensor& tensor, int r) {
  const int n = tensor.rank();
  check_bipartition(n, r);
  const int m = n - 2 * r;
  const Eigen::Index dim = Eigen::Index(1) << n;
  const Eigen::Index block = Eigen::Index(1) << m;
  const Eigen::Index groups = Eigen::Index(1) << (2 * r);

  std::vector<std::array<int, 4>> group_counts(static_cast<std::size_t>(groups));
  for (Eigen::Index mu = 0; mu < groups; ++mu) {
    group_counts[static_cast<std::size_t>(mu)] = base4_counts(mu, r);
  }

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  if (m == 0) {
    for (Eigen::Index mu = 0; mu < groups; ++mu) {
      for (Eigen::Index nu = 0; nu < groups; ++nu) {
        std::array<int, 4> key = group_counts[static_cast<std::size_t>(mu)];
        for (int i = 0; i < 4; ++i) key[static_cast<std::size_t>(i)] += group_counts[static_cast<std::size_t>(nu)][static_cast<std::size_t>(i)];
        out(mu, nu) = tensor.at(key);
      }
    }
    return out;
  }

  // Sum over the hidden tau multiset once; the symmetrized Pauli sum A_t is
  // shared by every (mu, nu) block.
  SymmetricTensor hidden(m);
  Eigen::MatrixXcd symmetrized(block, block);
  for (const auto& t : hidden.multisets()) {
    symmetrized.setZero();
    add_pauli_symmetrized(t, symmetrized);
    for (Eigen::Index mu = 0; mu < groups; ++mu) {
      for (Eigen::Index nu = 0; nu < groups; ++nu) {
        std::array<int, 4> key = t;
        for (int i = 0; i < 4; ++i) {
          key[static_cast<std::size_t>(i)] += group_counts[static_cast<std::size_t>(mu)][static_cast<std::size_t>(i)] +
                                              group_counts[static_cast<std::size_t>(nu)][static_cast<std::size_t>(i)];
        }
        const double weight = tensor.at(key);
        if (weight != 0.0) {
          out.block(mu * block, nu * block, block, block) += weight * symmetrized;
        }
      }
    }
  }
  return out;
}

double similarity_factor(int num_qubits, int r) {
  check_bipartition(num_qubits, r);
  return std::pow(2.0, -(num_qubits - r));
}

double similarity_residual(const DensityMatrix& rho, int r) {
  const int n = rho.qubit_count();
  check_bipartition(n, r);
  const Eigen::MatrixXcd t = t_matrix(tensor_from_state(rho), r);
  const Eigen::MatrixXcd embedded = embed_symmetric(rho.matrix(), n);
  const Eigen::MatrixXcd pt = partial_transpose(embedded, n, r);
  const Eigen::MatrixXcd rot = r_matrix(n, r);
  const double lambda = similarity_factor(n, r);
  return (rot.adjoint() * pt * rot - lambda * t).cwiseAbs().maxCoeff();
}

double trace_identity_check(const Eigen::Matrix4d& y) {
  if ((y - y.transpose()).cwiseAbs().maxCoeff() > kHermitianTol) {
    throw std::domain_error("trace_identity_check: matrix must be symmetric");
  }
  if (std::abs(y(1, 1) + y(2, 2) + y(3, 3) - y(0, 0)) > kHermitianTol) {
    throw std::domain_error("trace_identity_check: trace condition violated");
  }
  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      Complex lhs(0.0, 0.0);
      for (int tau = 0; tau < 4; ++tau) {
        for (int tau_p = 0; tau_p < 4; ++tau_p) {
          if (y(tau, tau_p) == 0.0) continue;
          const Complex tr = (pauli_matrix(mu) * pauli_matrix(tau) *
                              pauli_matrix(nu) * pauli_matrix(tau_p))
                                 .trace();
          lhs += 0.25 * y(tau, tau_p) * tr;
        }
      }
      worst = std::max(worst, std::abs(lhs - Complex(y(mu, nu), 0.0)));
    }
  }
  return worst;
}

double min_hermitian_eigenvalue(const Eigen::MatrixXcd& m) {
  const Eigen::MatrixXcd herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm,
                                                         Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool CriterionReport::all_pass() const {
  for (const auto& result : results) {
    if (!result.pass) return false;
  }
  return true;
}

CriterionReport evaluate_criteria(const DensityMatrix& rho,
                                  const CriteriaOptions& options) {
  if (options.tolerance <= 0.0) {
    throw std::invalid_argument("evaluate_criteria: tolerance must be positive");
  }
  CriterionReport report;
  report.qubit_count = rho.qubit_count();
  report.tolerance = options.tolerance;
  report.sufficient = (rho.qubit_count() == 2 || rho.qubit_count() == 3);
  if (rho.qubit_count() < 2) {
    return report;  // a single qubit has no bipartition
  }

  const SymmetricTensor x = tensor_from_state(rho);
  Eigen::MatrixXcd pt;
  if (options.with_similarity) {
    const Eigen::MatrixXcd embedded = embed_symmetric(rho.matrix(), rho.qubit_count());
    pt = embedded;  // transposed per r below
  }
  for (int r = 1; 2 * r <= rho.qubit_count(); ++r) {
    const Eigen::MatrixXcd t = t_matrix(x, r);
    CriterionResult result;
    result.r = r;
    result.lambda = similarity_factor(rho.qubit_count(), r);
    result.min_eigenvalue = min_hermitian_eigenvalue(t);
    result.pass = result.min_eigenvalue >= -options.tolerance;
    if (options.with_similarity) {
      const Eigen::MatrixXcd transposed =
          partial_transpose(pt, rho.qubit_count(), r);
      const Eigen::MatrixXcd rot = r_matrix(rho.qubit_count(), r);
      result.similarity_residual =
          (rot.adjoint() * transposed * rot - result.lambda * t)
              .cwiseAbs()
              .maxCoeff();
    }
    report.results.push_back(result);
  }
  return report;
}

}  // namespace symmcert
