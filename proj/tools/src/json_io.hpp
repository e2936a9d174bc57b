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

#include <optional>
#include <string>

#include <Eigen/Dense>
#include <json.hpp>

#include "symmcert/states.hpp"

namespace symmcert::cli {

using Json = nlohmann::ordered_json;

/**
 * On-disk description of a state: schema version, qubit count, and exactly
 * one representation — an explicit (N+1)x(N+1) Dicke-basis matrix, a 2^N
 * computational-basis matrix, or a declarative spec.
 */
struct StateDocument {
  std::string schema_version;
  int qubit_count = 0;
  std::optional<Eigen::MatrixXcd> dicke_matrix;
  std::optional<Eigen::MatrixXcd> computational_matrix;
  std::optional<StateSpec> spec;
  std::string spec_label;  // the spec "type" string, for echoing
};

// Complex values are serialized as [re, im] pairs; matrices as row lists.
Json matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_json(const Json& j);

StateSpec spec_from_json(const Json& j, int qubit_count);
StateDocument document_from_json(const Json& j);
Json document_to_json(const StateDocument& doc);

/// Reads a whole file, or stdin when path is "-".
std::string read_input(const std::string& path);
/// Writes to a file, or stdout when path is "-".
void write_output(const std::string& path, const std::string& content);

}  // namespace symmcert::cli
