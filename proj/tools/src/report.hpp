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
#include <optional>
#include <string>
#include <vector>

#include "json_io.hpp"
#include "symmcert/magic_basis.hpp"
#include "symmcert/ppt.hpp"

namespace symmcert::cli {

struct CorrelationRow {
  int r;
  double min_eigenvalue;  // of the Schur block S^(r)
  bool pass;
};

struct AnalysisReport {
  std::string source;
  std::string representation;
  int qubit_count = 0;
  double tolerance = kCriterionTol;
  bool sufficient = false;
  std::optional<double> projection_residual;
  double x_all_zero = 0.0;
  std::array<double, 3> first_moments{};
  std::optional<std::array<double, 3>> second_moment_diagonal;
  std::optional<double> contraction_residual;
  std::vector<CriterionResult> criteria;
  std::optional<std::vector<CorrelationRow>> correlations;
  bool overall_pass = true;
};

/// %.12g rendering shared by the text report and by tests comparing formats.
std::string format_sig12(double value);

Json report_to_json(const AnalysisReport& report);
std::string report_to_text(const AnalysisReport& report);

/// Exact surd text for entries like 1/2, -i/√2; decimal fallback otherwise.
std::string format_amplitude(const Complex& value);

std::string bases_to_text(const BasisFamily& family);
Json bases_to_json(const BasisFamily& family);

}  // namespace symmcert::cli
