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
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace symmcert {

using Complex = std::complex<double>;

/** Pauli labels: 0 is the 2x2 identity, 1/2/3 are x/y/z. */
enum class Pauli : int { I = 0, X = 1, Y = 2, Z = 3 };

/** The 2x2 matrix of sigma^mu. Throws std::domain_error unless mu is in {0,1,2,3}. */
const Eigen::Matrix2cd& pauli_matrix(int mu);

inline const Eigen::Matrix2cd& pauli_matrix(Pauli p) {
  return pauli_matrix(static_cast<int>(p));
}

/**
 * An ordered tuple (mu_1 ... mu_N) of Pauli labels addressing one entry of the
 * symmetric tensor. Two tuples with the same multiset key (k0,k1,k2,k3)
 * address the same tensor value.
 */
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<int> entries);

  /// Sorted representative of a multiset key, e.g. (1,2,0,1) -> (0,1,1,3,3).
  static MultiIndex from_counts(const std::array<int, 4>& counts);

  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }
  std::array<int, 4> counts() const;

 private:
  std::vector<int> entries_;
};

/// Digits of `code` in base 4, most significant first, as a length-`length`
/// multi-index (mu_1 ... mu_length).
std::vector<int> base4_digits(long code, int length);

/// Multiset key of the base-4 digits of `code`.
std::array<int, 4> base4_counts(long code, int length);

}  // namespace symmcert
