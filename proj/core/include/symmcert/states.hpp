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
#include <random>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "symmcert/tensor.hpp"

namespace symmcert {

/**
 * Point on the Bloch sphere. The associated 4-vector is
 * n = (1, sin t cos p, sin t sin p, cos t).
 */
struct BlochVector {
  double theta = 0.0;
  double phi = 0.0;

  std::array<double, 4> four_vector() const;
};

/// Convex mixture of spin coherent projectors: weights >= 0 summing to 1.
class ClassicalMixture {
 public:
  struct Component {
    double weight;
    BlochVector direction;
  };

  explicit ClassicalMixture(std::vector<Component> components);
  const std::vector<Component>& components() const { return components_; }

 private:
  std::vector<Component> components_;
};

/**
 * Spin coherent state in the Dicke basis: amplitude at excitation k is
 * sqrt(C(N,k)) cos^{N-k}(t/2) sin^k(t/2) e^{i k p}. Unit norm; the single
 * qubit moments satisfy <sigma^mu> = n_mu.
 */
Eigen::VectorXcd coherent_state(int num_qubits, const BlochVector& direction);

/// P v: embeds a Dicke-basis vector into the 2^N computational space.
Eigen::VectorXcd embed_symmetric(const Eigen::VectorXcd& dicke_vector,
                                 int num_qubits);

/// P rho P^dagger for a Dicke-basis operator.
Eigen::MatrixXcd embed_symmetric(const Eigen::MatrixXcd& dicke_operator,
                                 int num_qubits);

struct ClassicalState {
  DensityMatrix density;    // sum_i w_i |alpha_i><alpha_i| in the Dicke basis
  SymmetricTensor tensor;   // sum_i w_i n_{mu_1} ... n_{mu_N}, built directly
};

/**
 * Realizes a classical mixture both as a density matrix and as its tensor:
 * the two routes agree through tensor_from_state to 1e-12.
 */
ClassicalState classical_density(int num_qubits, const ClassicalMixture& mixture);

/**
 * Deterministic random source. Draws raw 64-bit words from mt19937_64 and
 * derives doubles explicitly, so sequences are identical across platforms.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform();  // [0, 1)
  double normal();
  BlochVector sphere_point();

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// G G^dagger / tr(G G^dagger) with G a seeded complex Gaussian matrix.
DensityMatrix random_density(int num_qubits, std::uint64_t seed);

/// Uniform sphere points with flat Dirichlet weights; reproducible by seed.
ClassicalMixture random_classical(int component_count, std::uint64_t seed);

/// (|k=0> + |k=N>)/sqrt(2) in the Dicke basis. Requires N >= 2.
Eigen::VectorXcd ghz_state(int num_qubits);

/// Projector |psi><psi| of a unit Dicke-basis vector, as a DensityMatrix.
DensityMatrix pure_density(const Eigen::VectorXcd& dicke_vector);

// Declarative state descriptions, the CLI-facing generator vocabulary.
struct CoherentSpec { double theta; double phi; };
struct DickeSpec { int excitations; };
struct GhzSpec {};
struct MixtureSpec { std::vector<ClassicalMixture::Component> components; };
struct RandomDensitySpec { std::uint64_t seed; };
struct RandomClassicalSpec { int component_count; std::uint64_t seed; };
struct ExplicitSpec { Eigen::MatrixXcd matrix; };

struct StateSpec {
  int qubit_count;
  std::variant<CoherentSpec, DickeSpec, GhzSpec, MixtureSpec,
               RandomDensitySpec, RandomClassicalSpec, ExplicitSpec>
      payload;
};

/// Builds the density matrix a StateSpec describes.
DensityMatrix realize(const StateSpec& spec);

}  // namespace symmcert
