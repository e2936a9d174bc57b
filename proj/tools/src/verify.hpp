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

#include <cstdint>
#include <string>
#include <vector>

#include "symmcert/tensor.hpp"

namespace symmcert::cli {

struct PropertyResult {
  std::string name;
  double residual;
  double tolerance;
  bool pass;
};

struct VerifyOptions {
  int n_max = 6;
  int seeds = 3;  // random states per (N, r) case
  double tolerance = 1e-10;
  std::uint64_t base_seed = 20260809;
};

/// Memory guard: verify materializes 2^N dense matrices.
inline constexpr int kVerifyMaxQubits = 10;

/**
 * Runs the property sweep (similarity theorem, spectrum equivalence, tensor
 * round trip, contraction, coherent-state identities, trace identity, R
 * unitarity, classical necessity, Schur sign agreement) up to n_max qubits.
 * Extra fixture states, if any, join the similarity and round-trip checks.
 */
std::vector<PropertyResult> run_verification(
    const VerifyOptions& options, const std::vector<DensityMatrix>& fixtures = {});

}  // namespace symmcert::cli
