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

#include "chanpur/tomography/records_io.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "chanpur/error.hpp"

namespace chanpur::tomography {

Json record_to_json(const CountRecord& record) {
  Json j = Json::object();
  if (record.setting.preparation) {
    j["prep"] = to_string(*record.setting.preparation);
  }
  std::string basis;
  for (Axis a : record.setting.basis) {
    basis += to_string(a);
  }
  j["basis"] = basis;
  if (record.exact()) {
    Json probs = Json::object();
    for (const auto& [label, p] : record.probabilities) {
      probs[label] = p;
    }
    j["probs"] = std::move(probs);
    j["shots"] = "exact";
  } else {
    Json counts = Json::object();
    for (const auto& [label, n] : record.counts) {
      counts[label] = n;
    }
    j["counts"] = std::move(counts);
    j["shots"] = record.shots;
  }
  return j;
}

CountRecord record_from_json(const Json& j) {
  if (!j.is_object()) {
    throw ParseError("count record must be a JSON object");
  }
  CountRecord rec;
  if (j.contains("prep")) {
    if (!j["prep"].is_string()) {
      throw ParseError("\"prep\" must be a string");
    }
    rec.setting.preparation = preparation_from_string(j["prep"].get<std::string>());
  }
  if (!j.contains("basis") || !j["basis"].is_string()) {
    throw ParseError("count record needs a string \"basis\"");
  }
  const std::string basis = j["basis"].get<std::string>();
  if (basis.empty()) {
    throw ParseError("\"basis\" must name at least one axis");
  }
  for (char c : basis) {
    rec.setting.basis.push_back(axis_from_string(std::string_view(&c, 1)));
  }
  const int n = rec.setting.n_qubits();
  const auto check_label = [n](const std::string& label) {
    if (label.size() != static_cast<std::size_t>(n) ||
        label.find_first_not_of("01") != std::string::npos) {
      throw ParseError("outcome label \"" + label + "\" does not match the basis");
    }
  };
  if (!j.contains("shots")) {
    throw ParseError("count record needs \"shots\"");
  }
  const Json& shots = j["shots"];
  if (shots.is_string()) {
    if (shots.get<std::string>() != "exact") {
      throw ParseError("\"shots\" must be a non-negative integer or \"exact\"");
    }
    rec.shots = kExactShots;
    if (!j.contains("probs") || !j["probs"].is_object()) {
      throw ParseError("exact record needs a \"probs\" object");
    }
    double total = 0.0;
    for (const auto& [label, p] : j["probs"].items()) {
      check_label(label);
      if (!p.is_number() || p.get<double>() < 0.0) {
        throw ParseError("probability for \"" + label + "\" must be a non-negative number");
      }
      rec.probabilities[label] = p.get<double>();
      total += p.get<double>();
    }
    if (std::abs(total - 1.0) > 1e-6) {
      throw ValidationError("exact record probabilities sum to " + format_real(total));
    }
    return rec;
  }
  if (!shots.is_number_unsigned()) {
    throw ParseError("\"shots\" must be a non-negative integer or \"exact\"");
  }
  rec.shots = shots.get<std::uint64_t>();
  if (!j.contains("counts") || !j["counts"].is_object()) {
    throw ParseError("count record needs a \"counts\" object");
  }
  std::uint64_t total = 0;
  for (const auto& [label, c] : j["counts"].items()) {
    check_label(label);
    if (!c.is_number_unsigned()) {
      throw ParseError("count for \"" + label + "\" must be a non-negative integer");
    }
    rec.counts[label] = c.get<std::uint64_t>();
    total += c.get<std::uint64_t>();
  }
  if (total != rec.shots) {
    throw ValidationError("counts sum to " + std::to_string(total) + " but shots is " +
                          std::to_string(rec.shots));
  }
  return rec;
}

void write_records_jsonl(std::ostream& out, const std::vector<CountRecord>& records) {
  for (const CountRecord& rec : records) {
    out << dump_json(record_to_json(rec), -1) << '\n';
  }
}

std::vector<CountRecord> read_records_jsonl(std::string_view text) {
  std::vector<CountRecord> records;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
      if (end == text.size()) {
        break;
      }
      continue;
    }
    try {
      records.push_back(record_from_json(parse_json_text(line)));
    } catch (const ParseError& e) {
      throw ParseError(std::string("record: ") + e.what(), line_no,
                       e.column() == 0 ? 1 : e.column());
    }
    if (end == text.size()) {
      break;
    }
  }
  return records;
}

}  // namespace chanpur::tomography
