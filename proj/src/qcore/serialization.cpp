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

#include "chanpur/qcore/serialization.hpp"

#include <cmath>
#include <cstdio>

#include "chanpur/error.hpp"

namespace chanpur {

namespace {

void dump_value(const Json& j, int indent, int depth, std::string& out) {
  const bool pretty = indent >= 0;
  auto newline = [&](int level) {
    if (pretty) {
      out.push_back('\n');
      out.append(static_cast<std::size_t>(level * indent), ' ');
    }
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out.push_back('{');
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) {
          out.push_back(',');
        }
        first = false;
        newline(depth + 1);
        out += Json(it.key()).dump();
        out += pretty ? ": " : ":";
        dump_value(it.value(), indent, depth + 1, out);
      }
      newline(depth);
      out.push_back('}');
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line; they are mostly [re, im] pairs.
      bool scalars = true;
      for (const auto& v : j) {
        scalars = scalars && !v.is_structured();
      }
      out.push_back('[');
      bool first = true;
      for (const auto& v : j) {
        if (!first) {
          out += (scalars && pretty) ? ", " : ",";
        }
        first = false;
        if (!scalars) {
          newline(depth + 1);
        }
        dump_value(v, indent, depth + 1, out);
      }
      if (!scalars) {
        newline(depth);
      }
      out.push_back(']');
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      out += std::isfinite(x) ? format_real(x) : std::string("null");
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string dump_json(const Json& doc, int indent) {
  std::string out;
  dump_value(doc, indent, 0, out);
  return out;
}

Json matrix_to_json(const qcore::ComplexMatrix& m) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      entries.push_back(Json::array({m(i, k).real(), m(i, k).imag()}));
    }
  }
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = std::move(entries);
  return j;
}

qcore::ComplexMatrix matrix_from_json(const Json& j) {
  try {
    const auto rows = j.at("rows").get<Eigen::Index>();
    const auto cols = j.at("cols").get<Eigen::Index>();
    const Json& entries = j.at("entries");
    if (rows < 1 || cols < 1 || static_cast<Eigen::Index>(entries.size()) != rows * cols) {
      throw ParseError("matrix entry count does not match rows * cols");
    }
    qcore::ComplexMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
      for (Eigen::Index k = 0; k < cols; ++k) {
        const Json& e = entries.at(static_cast<std::size_t>(i * cols + k));
        m(i, k) = {e.at(0).get<double>(), e.at(1).get<double>()};
      }
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed matrix: ") + e.what());
  }
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is 1-based and points at the offending character.
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, column] = line_column(text, offset);
    throw ParseError("invalid JSON", line, column);
  }
}

}  // namespace chanpur
