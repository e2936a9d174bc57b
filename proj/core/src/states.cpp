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

#include "symmcert/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "symmcert/symmetric_space.hpp"

namespace symmcert {

std::array<double, 4> BlochVector::four_vector() const {
  return {1.0, std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

ClassicalMixture::ClassicalMixture(std::vector<Component> components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw std::invalid_argument("ClassicalMixture: needs at least one component");
  }
  double total = 0.0;
  for (const auto& c : components_) {
    if (c.weight < 0.0) {
      throw std::invalid_argument("ClassicalMixture: negative weight");
    }
    total += c.weight;
  }
  if (std::abs(total - 1.0) > kTraceTol) {
    throw std::invalid_argument("ClassicalMixture: weights must sum to 1");
  }
}

Eigen::VectorXcd coherent_state(int num_qubits, const BlochVector& direction) {
  if (num_qubits < 1) {
    throw std::domain_error("coherent_state: qubit count must be >= 1");
  }
  const double c = std::cos(direction.theta / 2.0);
  const double s = std::sin(direction.theta / 2.0);
  Eigen::VectorXcd v(num_qubits + 1);
  for (int k = 0; k <= num_qubits; ++k) {
    const Complex phase = std::polar(1.0, static_cast<double>(k) * direction.phi);
    v(k) = std::sqrt(binomial(num_qubits, k)) * std::pow(c, num_qubits - k) *
           std::pow(s, k) * phase;
  }
  return v;
}

Eigen::VectorXcd embed_symmetric(const Eigen::VectorXcd& dicke_vector,
                                 int num_qubits) {
  if (dicke_vector.size() != num_qubits + 1) {
    throw std::domain_error("embed_symmetric: vector dimension is not N+1");
  }
  return symmetric_isometry(num_qubits) * dicke_vector;
}

Eigen::MatrixXcd embed_symmetric(const Eigen::MatrixXcd& dicke_operator,
                                 int num_qubits) {
  if (dicke_operator.rows() != num_qubits + 1 ||
      dicke_operator.cols() != num_qubits + 1) {
    throw std::domain_error("embed_symmetric: operator dimension is not N+1");
  }
  const Eigen::MatrixXcd p = symmetric_isometry(num_qubits);
  return p * dicke_operator * p.adjoint();
}

ClassicalState classical_density(int num_qubits, const ClassicalMixture& mixture) {
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(num_qubits + 1, num_qubits + 1);
  for (const auto& c : mixture.components()) {
    const Eigen::VectorXcd alpha = coherent_state(num_qubits, c.direction);
    rho += c.weight * (alpha * alpha.adjoint());
  }
  rho = 0.5 * (rho + rho.adjoint().eval());

  SymmetricTensor x(num_qubits);
  for (const auto& key : x.multisets()) {
    double value = 0.0;
    for (const auto& c : mixture.components()) {
      const auto n = c.direction.four_vector();
      value += c.weight * std::pow(n[1], key[1]) * std::pow(n[2], key[2]) *
               std::pow(n[3], key[3]);
    }
    x.set(key, value);
  }
  return ClassicalState{DensityMatrix(std::move(rho)), std::move(x)};
}

double Rng::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

BlochVector Rng::sphere_point() {
  const double z = 1.0 - 2.0 * uniform();
  const double phi = 2.0 * std::numbers::pi * uniform();
  return BlochVector{std::acos(std::clamp(z, -1.0, 1.0)), phi};
}

DensityMatrix random_density(int num_qubits, std::uint64_t seed) {
  if (num_qubits < 1) {
    throw std::domain_error("random_density: qubit count must be >= 1");
  }
  Rng rng(seed);
  const int dim = num_qubits + 1;
  Eigen::MatrixXcd g(dim, dim);
  for (int row = 0; row < dim; ++row) {
    for (int col = 0; col < dim; ++col) {
      g(row, col) = Complex(rng.normal(), rng.normal());
    }
  }
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint().eval());
  return DensityMatrix(std::move(rho));
}

ClassicalMixture random_classical(int component_count, std::uint64_t seed) {
  if (component_count < 1) {
    throw std::domain_error("random_classical: component count must be >= 1");
  }
  Rng rng(seed);
  std::vector<ClassicalMixture::Component> components;
  components.reserve(static_cast<std::size_t>(component_count));
  double total = 0.0;
  for (int i = 0; i < component_count; ++i) {
    // Flat Dirichlet weights = normalized unit exponentials.
    const double g = -std::log(1.0 - rng.uniform());
    components.push_back({g, rng.sphere_point()});
    total += g;
  }
  for (auto& c : components) c.weight /= total;
  return ClassicalMixture(std::move(components));
}

Eigen::VectorXcd ghz_state(int num_qubits) {
  if (num_qubits < 2) {
    throw std::domain_error("ghz_state: qubit count must be >= 2");
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(num_qubits + 1);
  v(0) = 1.0 / std::numbers::sqrt2;
  v(num_qubits) = 1.0 / std::numbers::sqrt2;
  return v;
}

DensityMatrix pure_density(const Eigen::VectorXcd& dicke_vector) {
  return DensityMatrix(dicke_vector * dicke_vector.adjoint());
}

DensityMatrix realize(const StateSpec& spec) {
  const int n = spec.qubit_count;
  return std::visit(
      [n](const auto& payload) -> DensityMatrix {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, CoherentSpec>) {
          return pure_density(
              coherent_state(n, BlochVector{payload.theta, payload.phi}));
        } else if constexpr (std::is_same_v<T, DickeSpec>) {
          if (payload.excitations < 0 || payload.excitations > n) {
            throw std::domain_error("realize: Dicke excitation count out of range");
          }
          return pure_density(Eigen::VectorXcd::Unit(n + 1, payload.excitations));
        } else if constexpr (std::is_same_v<T, GhzSpec>) {
          return pure_density(ghz_state(n));
        } else if constexpr (std::is_same_v<T, MixtureSpec>) {
          return classical_density(n, ClassicalMixture(payload.components)).density;
        } else if constexpr (std::is_same_v<T, RandomDensitySpec>) {
          return random_density(n, payload.seed);
        } else if constexpr (std::is_same_v<T, RandomClassicalSpec>) {
          return classical_density(
                     n, random_classical(payload.component_count, payload.seed))
              .density;
        } else {
          static_assert(std::is_same_v<T, ExplicitSpec>);
          if (payload.matrix.rows() != n + 1) {
            throw std::invalid_argument("realize: explicit matrix dimension is not N+1");
          }
          return DensityMatrix(payload.matrix);
        }
      },
      spec.payload);
}

}  // namespace symmcert
