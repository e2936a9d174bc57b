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

#include "symmcert/symmetric_space.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace symmcert {

namespace {

void check_qubit_count(int num_qubits) {
  if (num_qubits < 1) {
    throw std::domain_error("qubit count must be >= 1");
  }
  if (num_qubits > kMaxEmbeddedQubits) {
    throw std::domain_error("qubit count too large for dense 2^N storage");
  }
}

}  // namespace

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double result = 1.0;
  for (int i = 1; i <= k; ++i) {
    result *= static_cast<double>(n - k + i);
    result /= static_cast<double>(i);
  }
  return std::round(result);
}

double multinomial(const std::array<int, 4>& counts) {
  const int n = counts[0] + counts[1] + counts[2] + counts[3];
  double result = binomial(n, counts[0]);
  result *= binomial(n - counts[0], counts[1]);
  result *= binomial(n - counts[0] - counts[1], counts[2]);
  return result;
}

Eigen::VectorXcd dicke_state(int num_qubits, int excitations) {
  check_qubit_count(num_qubits);
  if (excitations < 0 || excitations > num_qubits) {
    throw std::domain_error("dicke_state: excitation count out of range");
  }
  const Eigen::Index dim = Eigen::Index(1) << num_qubits;
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  const double amplitude = 1.0 / std::sqrt(binomial(num_qubits, excitations));
  for (Eigen::Index b = 0; b < dim; ++b) {
    if (std::popcount(static_cast<unsigned long long>(b)) == excitations) {
      v(b) = amplitude;
    }
  }
  return v;
}

Eigen::MatrixXcd symmetric_isometry(int num_qubits) {
  check_qubit_count(num_qubits);
  const Eigen::Index dim = Eigen::Index(1) << num_qubits;
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, num_qubits + 1);
  for (int k = 0; k <= num_qubits; ++k) {
    p.col(k) = dicke_state(num_qubits, k);
  }
  return p;
}

Eigen::VectorXcd apply_pauli_string(const std::vector<int>& mu,
                                    const Eigen::VectorXcd& v) {
  const int n = static_cast<int>(mu.size());
  check_qubit_count(n);
  const Eigen::Index dim = Eigen::Index(1) << n;
  if (v.size() != dim) {
    throw std::domain_error("apply_pauli_string: vector size is not 2^N");
  }

  // Each sigma^mu has one nonzero per column, so the string maps basis state
  // b to a single target b ^ flip with a phase accumulated bit by bit.
  Eigen::Index flip = 0;
  for (int k = 0; k < n; ++k) {
    const int m = mu[static_cast<std::size_t>(k)];
    if (m < 0 || m > 3) {
      throw std::domain_error("apply_pauli_string: label out of range");
    }
    if (m == 1 || m == 2) flip |= Eigen::Index(1) << (n - 1 - k);
  }

  const Complex i_unit(0.0, 1.0);
  Eigen::VectorXcd w = Eigen::VectorXcd::Zero(dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const Complex amp = v(b);
    if (amp == Complex(0.0, 0.0)) continue;
    Complex phase(1.0, 0.0);
    for (int k = 0; k < n; ++k) {
      const int m = mu[static_cast<std::size_t>(k)];
      if (m < 2) continue;
      const int bit = static_cast<int>((b >> (n - 1 - k)) & 1);
      if (m == 2) {
        phase *= bit ? -i_unit : i_unit;  // sigma_y |0> = i|1>, |1> = -i|0>
      } else {
        if (bit) phase = -phase;
      }
    }
    w(b ^ flip) += phase * amp;
  }
  return w;
}

SOperator s_operator(const MultiIndex& index) {
  const int n = index.size();
  const Eigen::MatrixXcd p = symmetric_isometry(n);
  Eigen::MatrixXcd sigma_p(p.rows(), p.cols());
  for (int k = 0; k <= n; ++k) {
    sigma_p.col(k) = apply_pauli_string(index.entries(), p.col(k));
  }
  return SOperator{p.adjoint() * sigma_p, index};
}

}  // namespace symmcert
