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

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "json_io.hpp"
#include "report.hpp"
#include "symmcert/correlations.hpp"
#include "symmcert/magic_basis.hpp"
#include "symmcert/ppt.hpp"
#include "symmcert/states.hpp"
#include "symmcert/symmetric_space.hpp"
#include "symmcert/version.hpp"
#include "verify.hpp"

namespace {

using symmcert::cli::Json;

constexpr int kExitPass = 0;
constexpr int kExitError = 1;
constexpr int kExitFail = 2;
constexpr int kCliMaxQubits = 10;  // dense 2^N matrices beyond this are not desk scale

std::optional<std::uint64_t> seed_override_from_env() {
  const char* raw = std::getenv("SYMMCERT_SEED");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  return std::strtoull(raw, nullptr, 10);
}

// The SYMMCERT_SEED environment variable pins every random spec for
// reproducible runs.
void apply_seed_override(symmcert::StateSpec& spec) {
  const auto override = seed_override_from_env();
  if (!override) return;
  if (auto* random = std::get_if<symmcert::RandomDensitySpec>(&spec.payload)) {
    random->seed = *override;
  } else if (auto* classical =
                 std::get_if<symmcert::RandomClassicalSpec>(&spec.payload)) {
    classical->seed = *override;
  }
}

void check_cli_qubit_guard(int qubit_count) {
  if (qubit_count > kCliMaxQubits) {
    throw std::invalid_argument(
        "N = " + std::to_string(qubit_count) +
        " exceeds the CLI guard of 10 qubits (analysis builds dense 2^N matrices)");
  }
}

struct AnalyzeFlags {
  std::string input = "-";
  std::string output = "-";
  double tolerance = symmcert::kCriterionTol;
  bool check_similarity = false;
  bool correlations = false;
  bool computational = false;
  std::string format = "text";
};

int run_analyze(const AnalyzeFlags& flags) {
  const Json document_json = Json::parse(symmcert::cli::read_input(flags.input));
  symmcert::cli::StateDocument document =
      symmcert::cli::document_from_json(document_json);
  check_cli_qubit_guard(document.qubit_count);
  if (flags.tolerance <= 0.0) {
    throw std::invalid_argument("--tol must be positive");
  }

  symmcert::cli::AnalysisReport report;
  report.source = flags.input;
  report.qubit_count = document.qubit_count;
  report.tolerance = flags.tolerance;

  std::optional<symmcert::DensityMatrix> rho;
  if (document.dicke_matrix) {
    report.representation = "dicke_matrix";
    rho.emplace(*document.dicke_matrix);
  } else if (document.computational_matrix) {
    if (!flags.computational) {
      throw std::invalid_argument(
          "computational-basis input needs the --computational flag");
    }
    report.representation = "computational_matrix";
    const int n = document.qubit_count;
    const Eigen::MatrixXcd p = symmcert::symmetric_isometry(n);
    Eigen::MatrixXcd projected = p.adjoint() * (*document.computational_matrix) * p;
    const double residual =
        (*document.computational_matrix - p * projected * p.adjoint())
            .cwiseAbs()
            .maxCoeff();
    report.projection_residual = residual;
    if (residual > 1e-12) {
      std::cerr << "warning: input is not supported on the symmetric subspace; "
                << "projection residual = " << symmcert::cli::format_sig12(residual)
                << " (analyzing the renormalized symmetric part)\n";
    }
    const symmcert::Complex trace = projected.trace();
    if (std::abs(trace) < 1e-12) {
      throw std::invalid_argument("input has no weight on the symmetric subspace");
    }
    projected /= trace;
    rho.emplace(std::move(projected));
  } else {
    report.representation = "spec:" + document.spec_label;
    symmcert::StateSpec spec = *document.spec;
    apply_seed_override(spec);
    rho.emplace(symmcert::realize(spec));
  }

  const symmcert::SymmetricTensor tensor = symmcert::tensor_from_state(*rho);
  const int n = rho->qubit_count();
  report.x_all_zero = tensor.at({n, 0, 0, 0});
  for (int a = 1; a <= 3; ++a) {
    std::array<int, 4> key{n - 1, 0, 0, 0};
    key[static_cast<std::size_t>(a)] = 1;
    report.first_moments[static_cast<std::size_t>(a - 1)] = tensor.at(key);
  }
  if (n >= 2) {
    std::array<double, 3> diag{};
    for (int a = 1; a <= 3; ++a) {
      std::array<int, 4> key{n - 2, 0, 0, 0};
      key[static_cast<std::size_t>(a)] = 2;
      diag[static_cast<std::size_t>(a - 1)] = tensor.at(key);
    }
    report.second_moment_diagonal = diag;
    report.contraction_residual = symmcert::contraction_check(tensor);
  }

  const symmcert::CriterionReport criteria = symmcert::evaluate_criteria(
      *rho, {flags.tolerance, flags.check_similarity});
  report.sufficient = criteria.sufficient;
  report.criteria = criteria.results;
  report.overall_pass = criteria.all_pass();

  if (flags.correlations) {
    std::vector<symmcert::cli::CorrelationRow> rows;
    for (int r = 1; 2 * r <= n; ++r) {
      const Eigen::MatrixXd s_block =
          symmcert::schur_block(symmcert::correlation_matrix(tensor, r));
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
          Eigen::MatrixXd(0.5 * (s_block + s_block.transpose())),
          Eigen::EigenvaluesOnly);
      const double min_eig = solver.eigenvalues().minCoeff();
      const bool pass = min_eig >= -flags.tolerance;
      rows.push_back({r, min_eig, pass});
      report.overall_pass = report.overall_pass && pass;
    }
    report.correlations = std::move(rows);
  }

  std::string rendered;
  if (flags.format == "json") {
    rendered = symmcert::cli::report_to_json(report).dump(2) + "\n";
  } else {
    rendered = symmcert::cli::report_to_text(report);
  }
  symmcert::cli::write_output(flags.output, rendered);
  return report.overall_pass ? kExitPass : kExitFail;
}

struct GenerateFlags {
  std::string type;
  int qubit_count = 0;
  double theta = 0.0;
  double phi = 0.0;
  int excitations = 0;
  int components = 10;
  std::uint64_t seed = 1;
  std::string components_json;
  std::string output = "-";
};

int run_generate(const GenerateFlags& flags) {
  check_cli_qubit_guard(flags.qubit_count);
  symmcert::StateSpec spec{flags.qubit_count, symmcert::GhzSpec{}};
  if (flags.type == "coherent") {
    spec.payload = symmcert::CoherentSpec{flags.theta, flags.phi};
  } else if (flags.type == "dicke") {
    spec.payload = symmcert::DickeSpec{flags.excitations};
  } else if (flags.type == "ghz") {
    spec.payload = symmcert::GhzSpec{};
  } else if (flags.type == "classical") {
    std::string text = flags.components_json;
    if (!text.empty() && text.front() == '@') {
      text = symmcert::cli::read_input(text.substr(1));
    }
    if (text.empty()) {
      throw std::invalid_argument(
          "--components is required for --type classical (JSON array of "
          "{weight,theta,phi} objects, or @file)");
    }
    const Json parsed = Json::parse(text);
    std::vector<symmcert::ClassicalMixture::Component> components;
    for (const Json& c : parsed) {
      components.push_back({c.at("weight").get<double>(),
                            symmcert::BlochVector{c.at("theta").get<double>(),
                                                  c.at("phi").get<double>()}});
    }
    spec.payload = symmcert::MixtureSpec{std::move(components)};
  } else if (flags.type == "random") {
    spec.payload = symmcert::RandomDensitySpec{flags.seed};
  } else if (flags.type == "random-classical") {
    spec.payload = symmcert::RandomClassicalSpec{flags.components, flags.seed};
  } else {
    throw std::invalid_argument("unknown --type '" + flags.type + "'");
  }
  apply_seed_override(spec);

  const symmcert::DensityMatrix rho = symmcert::realize(spec);
  symmcert::cli::StateDocument document;
  document.schema_version = symmcert::kSchemaVersion;
  document.qubit_count = flags.qubit_count;
  document.dicke_matrix = rho.matrix();
  symmcert::cli::write_output(
      flags.output, symmcert::cli::document_to_json(document).dump(2) + "\n");
  return kExitPass;
}

struct BasesFlags {
  int qubit_count = 2;
  std::string convention = "raw";
  std::string format = "text";
};

int run_bases(const BasesFlags& flags) {
  symmcert::BasisConvention convention = symmcert::BasisConvention::RawR;
  if (flags.convention == "bell") {
    convention = symmcert::BasisConvention::BellTilde;
  } else if (flags.convention == "magic") {
    convention = symmcert::BasisConvention::Magic;
  } else if (flags.convention != "raw") {
    throw std::invalid_argument("unknown convention '" + flags.convention + "'");
  }
  const symmcert::BasisFamily family =
      symmcert::basis_family(flags.qubit_count, convention);
  if (flags.format == "json") {
    std::cout << symmcert::cli::bases_to_json(family).dump(2) << "\n";
  } else {
    std::cout << symmcert::cli::bases_to_text(family);
  }
  return kExitPass;
}

struct VerifyFlags {
  int n_max = 6;
  int seeds = 3;
  double tolerance = symmcert::kCriterionTol;
  std::vector<std::string> fixtures;
};

int run_verify(const VerifyFlags& flags) {
  std::vector<symmcert::DensityMatrix> fixture_states;
  for (const auto& path : flags.fixtures) {
    const Json document_json = Json::parse(symmcert::cli::read_input(path));
    symmcert::cli::StateDocument document =
        symmcert::cli::document_from_json(document_json);
    check_cli_qubit_guard(document.qubit_count);
    if (document.dicke_matrix) {
      fixture_states.emplace_back(*document.dicke_matrix);
    } else if (document.spec) {
      symmcert::StateSpec spec = *document.spec;
      apply_seed_override(spec);
      fixture_states.push_back(symmcert::realize(spec));
    } else {
      throw std::invalid_argument(
          "fixture '" + path + "': computational-basis fixtures are not supported");
    }
  }

  symmcert::cli::VerifyOptions options;
  options.n_max = flags.n_max;
  options.seeds = flags.seeds;
  options.tolerance = flags.tolerance;
  if (const auto override = seed_override_from_env()) {
    options.base_seed = *override;
  }
  const std::vector<symmcert::cli::PropertyResult> results =
      symmcert::cli::run_verification(options, fixture_states);

  bool all_pass = true;
  for (const auto& result : results) {
    std::ostringstream line;
    line << (result.pass ? "PASS " : "FAIL ") << result.name;
    for (std::size_t pad = result.name.size(); pad < 32; ++pad) line << ' ';
    line << " residual = " << symmcert::cli::format_sig12(result.residual)
         << "  (tol " << symmcert::cli::format_sig12(result.tolerance) << ")";
    std::cout << line.str() << "\n";
    all_pass = all_pass && result.pass;
  }
  std::cout << "verify: " << (all_pass ? "all properties passed" : "FAILURES above")
            << "  [N_max=" << flags.n_max << ", seeds=" << flags.seeds
            << ", tol=" << symmcert::cli::format_sig12(flags.tolerance) << "]\n";
  return all_pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classicality certification for symmetric multi-qubit states"};
  app.set_version_flag("--version", std::string("symmcert ") + symmcert::kVersion);
  app.require_subcommand(1);

  AnalyzeFlags analyze_flags;
  auto* analyze = app.add_subcommand(
      "analyze", "Evaluate the partial-transpose classicality criteria for a state");
  analyze->add_option("input", analyze_flags.input,
                      "StateDocument JSON path, or '-' for stdin");
  analyze->add_option("--tol", analyze_flags.tolerance,
                      "Eigenvalue slack for pass/fail verdicts");
  analyze->add_flag("--check-similarity", analyze_flags.check_similarity,
                    "Also report the similarity residual per bipartition");
  analyze->add_flag("--correlations", analyze_flags.correlations,
                    "Also evaluate the correlation-matrix criteria");
  analyze->add_flag("--computational", analyze_flags.computational,
                    "Accept a 2^N computational-basis matrix and project it");
  analyze->add_option("--format", analyze_flags.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("-o,--out", analyze_flags.output,
                      "Report destination, '-' for stdout");

  GenerateFlags generate_flags;
  auto* generate =
      app.add_subcommand("generate", "Write a StateDocument for a named state");
  generate
      ->add_option("--type", generate_flags.type,
                   "coherent | dicke | ghz | classical | random | random-classical")
      ->required();
  generate->add_option("--N", generate_flags.qubit_count, "Qubit count")->required();
  generate->add_option("--theta", generate_flags.theta, "Polar angle (coherent)");
  generate->add_option("--phi", generate_flags.phi, "Azimuth (coherent)");
  generate->add_option("--k", generate_flags.excitations, "Excitations (dicke)");
  generate->add_option("--m", generate_flags.components,
                       "Component count (random-classical)");
  generate->add_option("--seed", generate_flags.seed, "RNG seed");
  generate->add_option("--components", generate_flags.components_json,
                       "JSON array of {weight,theta,phi}, or @file (classical)");
  generate->add_option("-o,--out", generate_flags.output,
                       "Document destination, '-' for stdout");

  BasesFlags bases_flags;
  auto* bases = app.add_subcommand(
      "bases", "Print a generalized Bell / magic basis family");
  bases->add_option("--N", bases_flags.qubit_count, "Qubit count (2 or 4)");
  bases->add_option("--convention", bases_flags.convention, "raw | bell | magic");
  bases->add_option("--format", bases_flags.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  VerifyFlags verify_flags;
  auto* verify =
      app.add_subcommand("verify", "Run the library's property suite");
  verify->add_option("--n-max", verify_flags.n_max, "Largest qubit count (<= 10)");
  verify->add_option("--seeds", verify_flags.seeds, "Random states per case");
  verify->add_option("--tol", verify_flags.tolerance, "Criterion tolerance");
  verify->add_option("--fixture", verify_flags.fixtures,
                     "Extra StateDocument files to include in the sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*analyze) return run_analyze(analyze_flags);
    if (*generate) return run_generate(generate_flags);
    if (*bases) return run_bases(bases_flags);
    if (*verify) return run_verify(verify_flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
