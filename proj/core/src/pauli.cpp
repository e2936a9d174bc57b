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

#include "symmcert/pauli.hpp"

#include <stdexcept>
#include <utility>

namespace symmcert {

const Eigen::Matrix2cd& pauli_matrix(int mu) {
  static const std::array<Eigen::Matrix2cd, 4> matrices = [] {
    const Complex i(0.0, 1.0);
    std::array<Eigen::Matrix2cd, 4> m;
    m[0] << 1, 0, 0, 1;
    m[1] << 0, 1, 1, 0;
    m[2] << 0, -i, i, 0;
    m[3] << 1, 0, 0, -1;
    return m;
  }();
  if (mu < 0 || mu > 3) {
    throw std::domain_error("pauli_matrix: index must be in {0,1,2,3}");
  }
  return matrices[static_cast<std::size_t>(mu)];
}

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw std::domain_error("MultiIndex: needs at least one entry");
  }
  for (int mu : entries_) {
    if (mu < 0 || mu > 3) {
      throw std::domain_error("MultiIndex: entries must be in {0,1,2,3}");
    }
  }
}

MultiIndex MultiIndex::from_counts(const std::array<int, 4>& counts) {
  std::vector<int> entries;
  for (int mu = 0; mu < 4; ++mu) {
    if (counts[static_cast<std::size_t>(mu)] < 0) {
      throw std::domain_error("MultiIndex: negative multiset count");
    }
    entries.insert(entries.end(), static_cast<std::size_t>(counts[static_cast<std::size_t>(mu)]), mu);
  }
  return MultiIndex(std::move(entries));
}

std::array<int, 4> MultiIndex::counts() const {
  std::array<int, 4> c{0, 0, 0, 0};
  for (int mu : entries_) ++c[static_cast<std::size_t>(mu)];
  return c;
}

std::vector<int> base4_digits(long code, int length) {
  std::vector<int> digits(static_cast<std::size_t>(length));
  for (int k = 0; k < length; ++k) {
    digits[static_cast<std::size_t>(k)] =
        static_cast<int>((code >> (2 * (length - 1 - k))) & 3);
  }
  return digits;
}

std::array<int, 4> base4_counts(long code, int length) {
  std::array<int, 4> c{0, 0, 0, 0};
  for (int k = 0; k < length; ++k) {
    ++c[static_cast<std::size_t>((code >> (2 * k)) & 3)];
  }
  return c;
}

}  // namespace symmcert
