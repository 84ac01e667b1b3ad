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

#ifndef CHANPUR_TOMOGRAPHY_RECORDS_IO_HPP
#define CHANPUR_TOMOGRAPHY_RECORDS_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "chanpur/qcore/serialization.hpp"
#include "chanpur/tomography/measurement.hpp"

namespace chanpur::tomography {

/// {"prep":"+","basis":"Z","counts":{"0":n0,"1":n1},"shots":N}
/// Exact records use "shots":"exact" and a "probs" object instead of
/// "counts". State-tomography records omit "prep"; multi-qubit bases are
/// written as one letter per qubit, e.g. "XZ".
Json record_to_json(const CountRecord& record);
CountRecord record_from_json(const Json& j);

/// One compact JSON object per line, LF-terminated.
void write_records_jsonl(std::ostream& out, const std::vector<CountRecord>& records);

/// Parses JSON-lines text; blank lines are skipped. Errors carry the line
/// number of the offending record.
std::vector<CountRecord> read_records_jsonl(std::string_view text);

}  // namespace chanpur::tomography

#endif  // CHANPUR_TOMOGRAPHY_RECORDS_IO_HPP
