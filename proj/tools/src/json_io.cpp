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

#include "json_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "symmcert/version.hpp"

namespace symmcert::cli {

Json matrix_to_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXcd matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("matrix: expected a non-empty array of rows");
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j.at(0).size());
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j.at(static_cast<std::size_t>(r));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw std::invalid_argument("matrix: ragged rows");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Json& entry = row.at(static_cast<std::size_t>(c));
      if (!entry.is_array() || entry.size() != 2) {
        throw std::invalid_argument("matrix: entries must be [re, im] pairs");
      }
      m(r, c) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  return m;
}

StateSpec spec_from_json(const Json& j, int qubit_count) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "coherent") {
    return StateSpec{qubit_count,
                     CoherentSpec{j.at("theta").get<double>(), j.at("phi").get<double>()}};
  }
  if (type == "dicke") {
    return StateSpec{qubit_count, DickeSpec{j.at("k").get<int>()}};
  }
  if (type == "ghz") {
    return StateSpec{qubit_count, GhzSpec{}};
  }
  if (type == "classical_mixture") {
    std::vector<ClassicalMixture::Component> components;
    for (const Json& c : j.at("components")) {
      components.push_back({c.at("weight").get<double>(),
                            BlochVector{c.at("theta").get<double>(),
                                        c.at("phi").get<double>()}});
    }
    return StateSpec{qubit_count, MixtureSpec{std::move(components)}};
  }
  if (type == "random_density") {
    return StateSpec{qubit_count, RandomDensitySpec{j.at("seed").get<std::uint64_t>()}};
  }
  if (type == "random_classical") {
    return StateSpec{qubit_count,
                     RandomClassicalSpec{j.at("components").get<int>(),
                                         j.at("seed").get<std::uint64_t>()}};
  }
  if (type == "explicit") {
    return StateSpec{qubit_count, ExplicitSpec{matrix_from_json(j.at("matrix"))}};
  }
  throw std::invalid_argument("spec: unknown type '" + type + "'");
}

StateDocument document_from_json(const Json& j) {
  StateDocument doc;
  doc.schema_version = j.value("schema_version", std::string(kSchemaVersion));
  if (!j.contains("N")) {
    throw std::invalid_argument("document: missing qubit count 'N'");
  }
  doc.qubit_count = j.at("N").get<int>();
  if (doc.qubit_count < 1) {
    throw std::invalid_argument("document: 'N' must be >= 1");
  }
  int representations = 0;
  if (j.contains("dicke_matrix")) {
    doc.dicke_matrix = matrix_from_json(j.at("dicke_matrix"));
    ++representations;
  }
  if (j.contains("computational_matrix")) {
    doc.computational_matrix = matrix_from_json(j.at("computational_matrix"));
    ++representations;
  }
  if (j.contains("spec")) {
    doc.spec = spec_from_json(j.at("spec"), doc.qubit_count);
    doc.spec_label = j.at("spec").at("type").get<std::string>();
    ++representations;
  }
  if (representations != 1) {
    throw std::invalid_argument(
        "document: exactly one of dicke_matrix, computational_matrix, spec is required");
  }
  if (doc.dicke_matrix &&
      (doc.dicke_matrix->rows() != doc.qubit_count + 1 ||
       doc.dicke_matrix->cols() != doc.qubit_count + 1)) {
    throw std::invalid_argument("document: dicke_matrix must be (N+1) x (N+1)");
  }
  if (doc.computational_matrix) {
    const Eigen::Index dim = Eigen::Index(1) << doc.qubit_count;
    if (doc.computational_matrix->rows() != dim ||
        doc.computational_matrix->cols() != dim) {
      throw std::invalid_argument("document: computational_matrix must be 2^N x 2^N");
    }
  }
  return doc;
}

Json document_to_json(const StateDocument& doc) {
  Json j;
  j["schema_version"] = doc.schema_version;
  j["N"] = doc.qubit_count;
  if (doc.dicke_matrix) {
    j["dicke_matrix"] = matrix_to_json(*doc.dicke_matrix);
  }
  if (doc.computational_matrix) {
    j["computational_matrix"] = matrix_to_json(*doc.computational_matrix);
  }
  return j;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open input file '" + path + "'");
  }
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot open output file '" + path + "'");
  }
  out << content;
  if (!out) {
    throw std::invalid_argument("failed writing output file '" + path + "'");
  }
}

}  // namespace symmcert::cli
