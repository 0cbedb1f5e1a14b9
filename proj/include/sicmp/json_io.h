// Copyright 2026 The sicmp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SICMP_JSON_IO_H
#define SICMP_JSON_IO_H

#include <filesystem>
#include <string>

#include "json.hpp"
#include "sicmp/qstate.h"

namespace sicmp {

using Json = nlohmann::json;

// Matrices and vectors serialize as {"dim": n, "re": [...], "im": [...]},
// row-major. A square n x n matrix carries n*n entries and a vector n entries.
// Non-square matrices add "rows" and "cols".

Json matrix_to_json(const Matrix& m);
Json vector_to_json(const Vector& v);
Json real_vector_to_json(const RealVector& v);

/// Throws std::invalid_argument on malformed input.
Matrix matrix_from_json(const Json& j);
Vector vector_from_json(const Json& j);
RealVector real_vector_from_json(const Json& j);

/// True when the object's entry count equals its "dim" (vector form).
bool json_is_vector(const Json& j);

/// A state file holds either a vector (pure state) or a square matrix.
DensityOperator state_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace sicmp

#endif  // SICMP_JSON_IO_H
