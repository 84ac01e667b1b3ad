// Copyright 2026 The chanpur Authors
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

#ifndef CHANPUR_QCORE_SERIALIZATION_HPP
#define CHANPUR_QCORE_SERIALIZATION_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "chanpur/qcore/linalg.hpp"

namespace chanpur {

/// Insertion-ordered JSON document; key order is part of the byte-stable
/// output contract.
using Json = nlohmann::ordered_json;

/// "%.17g": lossless for doubles and identical across runs.
std::string format_real(double x);

/// Serialises `doc` with every floating-point number printed by
/// format_real(). Non-finite numbers become null. indent < 0 gives a single
/// line.
std::string dump_json(const Json& doc, int indent = 2);

/// {"rows": r, "cols": c, "entries": [[re, im], ...]} in row-major order.
Json matrix_to_json(const qcore::ComplexMatrix& m);
qcore::ComplexMatrix matrix_from_json(const Json& j);

/// 1-based (line, column) of a byte offset into `text`.
std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset);

/// Parses JSON text, converting syntax errors into chanpur::ParseError with
/// line and column.
Json parse_json_text(std::string_view text);

}  // namespace chanpur

#endif  // CHANPUR_QCORE_SERIALIZATION_HPP
