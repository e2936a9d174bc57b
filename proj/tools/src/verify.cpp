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

#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "symmcert/correlations.hpp"
#include "symmcert/ppt.hpp"
#include "symmcert/states.hpp"
#include "symmcert/symmetric_space.hpp"

namespace symmcert::cli {

namespace {

Eigen::VectorXd sorted_eigenvalues(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      Eigen::MatrixXcd(0.5 * (m + m.adjoint())), Eigen::EigenvaluesOnly);
  Eigen::VectorXd values = solver.eigenvalues();
  std::sort(values.data(), values.data() + values.size());
  return values;
}

}  // namespace

std::vector<PropertyResult> run_verification(
    const VerifyOptions& options, const std::vector<DensityMatrix>& fixtures) {
  if (options.n_max < 2) {
    throw std::invalid_argument("verify: N_max must be >= 2");
  }
  if (options.n_max > kVerifyMaxQubits) {
    throw std::invalid_argument(
        "verify: N_max above 10 would materialize 2^N dense matrices beyond the "
        "desk-scale guard; lower --n-max");
  }
  const int n_max = options.n_max;
  const int seeds = std::max(1, options.seeds);
  const std::uint64_t base = options.base_seed;

  std::vector<PropertyResult> results;
  const auto record = [&results](std::string name, double residual, double tol) {
    results.push_back({std::move(name), residual, tol, residual <= tol});
  };

  // Dicke isometry columns stay orthonormal.
  double isometry = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    const Eigen::MatrixXcd p = symmetric_isometry(n);
    Eigen::MatrixXcd gram = p.adjoint() * p;
    gram -= Eigen::MatrixXcd::Identity(n + 1, n + 1);
    isometry = std::max(isometry, gram.cwiseAbs().maxCoeff());
  }
  record("isometry_orthonormality", isometry, 1e-14);

  // rho -> X -> rho plus the contraction property of every produced tensor.
  double round_trip = 0.0;
  double contraction = 0.0;
  std::vector<DensityMatrix> states;
  for (int n = 2; n <= n_max; ++n) {
    for (int s = 0; s < seeds; ++s) {
      states.push_back(random_density(n, base + 100u * static_cast<unsigned>(n) + static_cast<unsigned>(s)));
    }
  }
  for (const auto& fixture : fixtures) {
    if (fixture.qubit_count() >= 2 && fixture.qubit_count() <= n_max) {
      states.push_back(fixture);
    }
  }
  for (const auto& rho : states) {
    const SymmetricTensor x = tensor_from_state(rho);
    const DensityMatrix back = state_from_tensor(x);
    round_trip = std::max(
        round_trip, (back.matrix() - rho.matrix()).cwiseAbs().maxCoeff());
    contraction = std::max(contraction, contraction_check(x));
  }
  record("tensor_round_trip", round_trip, 1e-11);
  record("tensor_contraction", contraction, 1e-12);

  // Embedded coherent states factor into N-fold tensor powers, and the
  // single-qubit moments reproduce the Bloch 4-vector.
  double factorization = 0.0;
  double moments = 0.0;
  {
    Rng rng(base + 7);
    for (int s = 0; s < 10 * seeds; ++s) {
      const BlochVector direction = rng.sphere_point();
      const Eigen::VectorXcd one = coherent_state(1, direction);
      const auto n4 = direction.four_vector();
      for (int mu = 0; mu < 4; ++mu) {
        const Complex m = one.adjoint() * pauli_matrix(mu) * one;
        moments = std::max(moments,
                           std::abs(m - Complex(n4[static_cast<std::size_t>(mu)], 0.0)));
      }
      for (int n = 2; n <= std::min(n_max, 5); ++n) {
        const Eigen::VectorXcd embedded = embed_symmetric(coherent_state(n, direction), n);
        Eigen::VectorXcd power = one;
        for (int q = 1; q < n; ++q) {
          Eigen::VectorXcd next(power.size() * 2);
          for (Eigen::Index i = 0; i < power.size(); ++i) {
            next(2 * i) = power(i) * one(0);
            next(2 * i + 1) = power(i) * one(1);
          }
          power.swap(next);
        }
        factorization = std::max(factorization,
                                 (embedded - power).cwiseAbs().maxCoeff());
      }
    }
  }
  record("coherent_factorization", factorization, 1e-12);
  record("coherent_moments", moments, 1e-13);

  // Matrix route vs direct tensor route for classical mixtures.
  double two_route = 0.0;
  for (int n = 2; n <= n_max; n += 2) {
    const ClassicalState classical =
        classical_density(n, random_classical(12, base + 31u + static_cast<unsigned>(n)));
    const SymmetricTensor from_matrix = tensor_from_state(classical.density);
    for (const auto& key : classical.tensor.multisets()) {
      two_route = std::max(two_route,
                           std::abs(classical.tensor.at(key) - from_matrix.at(key)));
    }
  }
  record("classical_two_route_agreement", two_route, 1e-12);

  // R unitarity, the similarity theorem, and spectrum equivalence.
  double unitarity = 0.0;
  double similarity = 0.0;
  double spectrum = 0.0;
  for (int n = 2; n <= n_max; ++n) {
    for (int r = 1; 2 * r <= n; ++r) {
      const Eigen::MatrixXcd rot = r_matrix(n, r);
      Eigen::MatrixXcd gram = rot.adjoint() * rot;
      gram -= Eigen::MatrixXcd::Identity(rot.cols(), rot.cols());
      unitarity = std::max(unitarity, gram.cwiseAbs().maxCoeff());
      for (int s = 0; s < seeds; ++s) {
        const DensityMatrix rho =
            random_density(n, base + 1000u * static_cast<unsigned>(n) +
                                  10u * static_cast<unsigned>(r) + static_cast<unsigned>(s));
        similarity = std::max(similarity, similarity_residual(rho, r));
        const Eigen::MatrixXcd pt =
            partial_transpose(embed_symmetric(rho.matrix(), n), n, r);
        const Eigen::VectorXd lhs = sorted_eigenvalues(pt);
        Eigen::VectorXd rhs =
            sorted_eigenvalues(t_matrix(tensor_from_state(rho), r));
        rhs *= similarity_factor(n, r);
        spectrum = std::max(spectrum, (lhs - rhs).cwiseAbs().maxCoeff());
      }
    }
  }
  for (const auto& fixture : fixtures) {
    const int n = fixture.qubit_count();
    if (n < 2 || n > n_max) continue;
    for (int r = 1; 2 * r <= n; ++r) {
      similarity = std::max(similarity, similarity_residual(fixture, r));
    }
  }
  record("r_unitarity", unitarity, 1e-12);
  record("similarity_theorem", similarity, 1e-11);
  record("spectrum_equivalence", spectrum, 1e-10);

  // Trace identity on random admissible y matrices.
  double identity = 0.0;
  {
    Rng rng(base + 97);
    for (int s = 0; s < 20 * seeds; ++s) {
      Eigen::Matrix4d y;
      for (int row = 0; row < 4; ++row) {
        for (int col = row; col < 4; ++col) {
          y(row, col) = rng.normal();
          y(col, row) = y(row, col);
        }
      }
      y(0, 0) = y(1, 1) + y(2, 2) + y(3, 3);
      identity = std::max(identity, trace_identity_check(y));
    }
  }
  record("trace_identity", identity, 1e-13);

  // Every classical mixture passes all T^(r) and S^(r) criteria.
  double necessity = 0.0;
  for (int n = 2; n <= n_max; n += 2) {
    for (int s = 0; s < seeds; ++s) {
      const ClassicalState classical = classical_density(
          n, random_classical(25, base + 400u + 10u * static_cast<unsigned>(n) + static_cast<unsigned>(s)));
      const CriterionReport report =
          evaluate_criteria(classical.density, {options.tolerance, false});
      for (const auto& row : report.results) {
        necessity = std::max(necessity, std::max(0.0, -row.min_eigenvalue));
      }
      const SymmetricTensor x = tensor_from_state(classical.density);
      for (int r = 1; 2 * r <= n; ++r) {
        const Eigen::MatrixXd s_block = schur_block(correlation_matrix(x, r));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
            Eigen::MatrixXd(0.5 * (s_block + s_block.transpose())),
            Eigen::EigenvaluesOnly);
        necessity = std::max(necessity,
                             std::max(0.0, -solver.eigenvalues().minCoeff()));
      }
    }
  }
  record("classical_necessity", necessity, options.tolerance);

  // Schur equivalence: verdict signs agree whenever both margins are clear.
  int disagreements = 0;
  for (int n = 2; n <= n_max; n += 2) {
    for (int s = 0; s < 10 * seeds; ++s) {
      const DensityMatrix rho =
          random_density(n, base + 900u + 20u * static_cast<unsigned>(n) + static_cast<unsigned>(s));
      for (int r = 1; 2 * r <= n; ++r) {
        const SchurEquivalence eq = schur_equivalence_check(rho, r, options.tolerance);
        if (std::abs(eq.block_min_eigenvalue) > 1e-8 &&
            std::abs(eq.correlation_min_eigenvalue) > 1e-8 && !eq.agree) {
          ++disagreements;
        }
      }
    }
  }
  record("schur_sign_agreement", static_cast<double>(disagreements), 0.0);

  return results;
}

}  // namespace symmcert::cli
