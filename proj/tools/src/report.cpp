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

#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "symmcert/version.hpp"

namespace symmcert::cli {

std::string format_sig12(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

Json report_to_json(const AnalysisReport& report) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["tool_version"] = kVersion;
  Json input;
  input["source"] = report.source;
  input["representation"] = report.representation;
  input["N"] = report.qubit_count;
  if (report.projection_residual) {
    input["projection_residual"] = *report.projection_residual;
  }
  j["input"] = std::move(input);
  j["tolerance"] = report.tolerance;
  j["sufficient"] = report.sufficient;

  Json tensor;
  tensor["x_all_zero"] = report.x_all_zero;
  tensor["first_moments"] = report.first_moments;
  if (report.second_moment_diagonal) {
    tensor["second_moment_diagonal"] = *report.second_moment_diagonal;
  }
  if (report.contraction_residual) {
    tensor["contraction_residual"] = *report.contraction_residual;
  }
  j["tensor"] = std::move(tensor);

  Json criteria = Json::array();
  for (const auto& row : report.criteria) {
    Json c;
    c["r"] = row.r;
    c["lambda"] = row.lambda;
    c["min_eigenvalue"] = row.min_eigenvalue;
    c["verdict"] = row.pass ? "pass" : "fail";
    if (row.similarity_residual) {
      c["similarity_residual"] = *row.similarity_residual;
    } else {
      c["similarity_residual"] = nullptr;
    }
    criteria.push_back(std::move(c));
  }
  j["criteria"] = std::move(criteria);

  if (report.correlations) {
    Json rows = Json::array();
    for (const auto& row : *report.correlations) {
      Json c;
      c["r"] = row.r;
      c["min_eigenvalue"] = row.min_eigenvalue;
      c["verdict"] = row.pass ? "pass" : "fail";
      rows.push_back(std::move(c));
    }
    j["correlations"] = std::move(rows);
  }
  j["overall"] = report.overall_pass ? "pass" : "fail";
  return j;
}

std::string report_to_text(const AnalysisReport& report) {
  std::ostringstream out;
  out << "symmcert " << kVersion << " — classicality report\n";
  out << "input: " << report.source << " (" << report.representation
      << "), N = " << report.qubit_count << "\n";
  if (report.projection_residual) {
    out << "projection residual: " << format_sig12(*report.projection_residual)
        << "\n";
  }
  out << "tolerance: " << format_sig12(report.tolerance) << "\n";
  out << "scope: " << (report.sufficient
                           ? "necessary and sufficient (N in {2,3})"
                           : "necessary only")
      << "\n";
  out << "tensor: X[0...0] = " << format_sig12(report.x_all_zero)
      << ", first moments = (" << format_sig12(report.first_moments[0]) << ", "
      << format_sig12(report.first_moments[1]) << ", "
      << format_sig12(report.first_moments[2]) << ")\n";
  if (report.second_moment_diagonal) {
    const auto& d = *report.second_moment_diagonal;
    out << "        second moments (xx,yy,zz) = (" << format_sig12(d[0]) << ", "
        << format_sig12(d[1]) << ", " << format_sig12(d[2]) << ")";
    if (report.contraction_residual) {
      out << ", contraction residual = " << format_sig12(*report.contraction_residual);
    }
    out << "\n";
  }
  if (report.criteria.empty()) {
    out << "no bipartition exists for N = " << report.qubit_count
        << "; nothing to test\n";
  }
  for (const auto& row : report.criteria) {
    out << "PT(" << report.qubit_count - row.r << ":" << row.r << ")  r=" << row.r
        << "  lambda=" << format_sig12(row.lambda)
        << "  min eig(T) = " << format_sig12(row.min_eigenvalue) << "  "
        << (row.pass ? "PASS" : "FAIL");
    if (row.similarity_residual) {
      out << "  (similarity residual = " << format_sig12(*row.similarity_residual)
          << ")";
    }
    out << "\n";
  }
  if (report.correlations) {
    for (const auto& row : *report.correlations) {
      out << "C(" << row.r << ")  min eig(S) = " << format_sig12(row.min_eigenvalue)
          << "  " << (row.pass ? "PASS" : "FAIL") << "\n";
    }
  }
  out << "overall: " << (report.overall_pass ? "PASS" : "FAIL");
  if (!report.overall_pass) {
    out << " — state is not classical (fails a partial-transpose criterion)";
  } else if (!report.sufficient && !report.criteria.empty()) {
    out << " — necessary criteria hold; not a separability certificate for N >= 4";
  }
  out << "\n";
  return out.str();
}

namespace {

// Family entries are 0 or (norm) * {1, -1, i, -i} with norm 1/sqrt(2) or 1/2;
// match those exactly, fall back to decimals otherwise.
std::string surd_magnitude(double magnitude) {
  constexpr double tol = 1e-12;
  if (std::abs(magnitude - 1.0) < tol) return "1";
  if (std::abs(magnitude - 0.5) < tol) return "1/2";
  if (std::abs(magnitude - 1.0 / std::sqrt(2.0)) < tol) return "1/√2";
  return {};
}

}  // namespace

std::string format_amplitude(const Complex& value) {
  constexpr double tol = 1e-12;
  if (std::abs(value) < tol) return "0";
  if (std::abs(value.imag()) < tol) {
    const std::string name = surd_magnitude(std::abs(value.real()));
    if (!name.empty()) return value.real() > 0 ? name : "-" + name;
  } else if (std::abs(value.real()) < tol) {
    const std::string name = surd_magnitude(std::abs(value.imag()));
    if (!name.empty()) {
      std::string txt = value.imag() > 0 ? "i" : "-i";
      if (name != "1") txt += name.substr(1);  // "i/2", "i/√2"
      return txt;
    }
  }
  std::ostringstream out;
  out << format_sig12(value.real());
  if (value.imag() >= 0) out << "+";
  out << format_sig12(value.imag()) << "i";
  return out.str();
}

namespace {

std::string label_text(const std::vector<int>& label) {
  std::string txt = "(";
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i > 0) txt += ",";
    txt += std::to_string(label[i]);
  }
  txt += ")";
  return txt;
}

std::string convention_name(BasisConvention convention) {
  switch (convention) {
    case BasisConvention::RawR:
      return "raw";
    case BasisConvention::BellTilde:
      return "bell";
    default:
      return "magic";
  }
}

}  // namespace

std::string bases_to_text(const BasisFamily& family) {
  std::ostringstream out;
  out << "basis family: N = " << family.qubit_count
      << ", convention = " << convention_name(family.convention) << "\n";
  for (Eigen::Index col = 0; col < family.vectors.cols(); ++col) {
    out << "column " << label_text(family.labels[static_cast<std::size_t>(col)])
        << ": [";
    for (Eigen::Index row = 0; row < family.vectors.rows(); ++row) {
      if (row > 0) out << ", ";
      out << format_amplitude(family.vectors(row, col));
    }
    out << "]\n";
  }
  return out.str();
}

Json bases_to_json(const BasisFamily& family) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["N"] = family.qubit_count;
  j["convention"] = convention_name(family.convention);
  Json columns = Json::array();
  for (Eigen::Index col = 0; col < family.vectors.cols(); ++col) {
    Json c;
    c["label"] = family.labels[static_cast<std::size_t>(col)];
    Json entries = Json::array();
    Json pretty = Json::array();
    for (Eigen::Index row = 0; row < family.vectors.rows(); ++row) {
      const Complex v = family.vectors(row, col);
      entries.push_back(Json::array({v.real(), v.imag()}));
      pretty.push_back(format_amplitude(v));
    }
    c["vector"] = std::move(entries);
    c["text"] = std::move(pretty);
    columns.push_back(std::move(c));
  }
  j["columns"] = std::move(columns);
  return j;
}

}  // namespace symmcert::cli
