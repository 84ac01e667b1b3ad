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

#include "chanpur/qcore/channel_spec.hpp"

#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "chanpur/error.hpp"
#include "chanpur/qcore/serialization.hpp"

namespace chanpur::qcore {

namespace {

double get_number(const Json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw ParseError(std::string("channel spec is missing \"") + key + "\"");
  }
  const Json& v = doc.at(key);
  if (!v.is_number()) {
    throw ParseError(std::string("channel spec field \"") + key + "\" must be a number");
  }
  return v.get<double>();
}

int get_qubits(const Json& doc) {
  if (!doc.contains("n_qubits")) {
    return 1;
  }
  const Json& v = doc.at("n_qubits");
  if (!v.is_number_integer()) {
    throw ParseError("channel spec field \"n_qubits\" must be an integer");
  }
  return v.get<int>();
}

Complex parse_entry(const Json& e) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
    throw ParseError("Kraus entries must be [re, im] pairs");
  }
  return {e[0].get<double>(), e[1].get<double>()};
}

ComplexMatrix parse_kraus_op(const Json& op, std::size_t dim) {
  if (!op.is_array()) {
    throw ParseError("Kraus operator must be an array");
  }
  const auto d = static_cast<Eigen::Index>(dim);
  ComplexMatrix m(d, d);
  const bool nested = !op.empty() && op[0].is_array() && !op[0].empty() && op[0][0].is_array();
  if (nested) {
    if (op.size() != dim) {
      throw ParseError("Kraus operator must have dim rows");
    }
    for (Eigen::Index i = 0; i < d; ++i) {
      const Json& row = op[static_cast<std::size_t>(i)];
      if (!row.is_array() || row.size() != dim) {
        throw ParseError("Kraus operator rows must have dim entries");
      }
      for (Eigen::Index k = 0; k < d; ++k) {
        m(i, k) = parse_entry(row[static_cast<std::size_t>(k)]);
      }
    }
  } else {
    if (op.size() != dim * dim) {
      throw ParseError("flat Kraus operator must have dim * dim entries");
    }
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index k = 0; k < d; ++k) {
        m(i, k) = parse_entry(op[static_cast<std::size_t>(i * d + k)]);
      }
    }
  }
  return m;
}

ChannelSpec from_pauli(std::string type, PauliChannel pc) {
  KrausChannel ch = pauli_channel_to_kraus(pc);
  return ChannelSpec{std::move(type), std::move(ch), std::move(pc)};
}

PauliChannel ingest_pauli(int n_qubits, const Json& probs) {
  if (!probs.is_object()) {
    throw ParseError("\"probs\" must be an object mapping Pauli labels to probabilities");
  }
  std::map<std::string, double> labelled;
  double total = 0.0;
  for (auto it = probs.begin(); it != probs.end(); ++it) {
    if (!it.value().is_number()) {
      throw ParseError("probability for \"" + it.key() + "\" must be a number");
    }
    const double p = it.value().get<double>();
    labelled[it.key()] = p;
    total += p;
  }
  if (std::abs(total - 1.0) > kIngestSumTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "normalization error: Pauli probabilities sum to " << total
       << " (must be 1 within 1e-6)";
    throw ValidationError(os.str());
  }
  for (auto& [label, p] : labelled) {
    p /= total;
  }
  return PauliChannel::from_labels(n_qubits, labelled, 1e-12);
}

}  // namespace

ChannelSpec parse_channel_spec(std::string_view text) {
  const Json doc = parse_json_text(text);
  if (!doc.is_object() || !doc.contains("type") || !doc.at("type").is_string()) {
    throw ParseError("channel spec must be an object with a string \"type\"");
  }
  const std::string type = doc.at("type").get<std::string>();
  if (type == "pauli") {
    if (!doc.contains("probs")) {
      throw ParseError("pauli channel spec is missing \"probs\"");
    }
    return from_pauli(type, ingest_pauli(get_qubits(doc), doc.at("probs")));
  }
  if (type == "depolarizing") {
    return from_pauli(type, depolarizing_channel(get_number(doc, "p"), get_qubits(doc)));
  }
  if (type == "bit_flip") {
    return from_pauli(type, bit_flip_channel(get_number(doc, "p0")));
  }
  if (type == "phase_flip") {
    return from_pauli(type, phase_flip_channel(get_number(doc, "p0")));
  }
  if (type == "identity") {
    return from_pauli(type, identity_pauli_channel(get_qubits(doc)));
  }
  if (type == "kraus") {
    const double dim_value = get_number(doc, "dim");
    if (dim_value < 1 || dim_value != static_cast<double>(static_cast<std::size_t>(dim_value))) {
      throw ParseError("\"dim\" must be a positive integer");
    }
    const auto dim = static_cast<std::size_t>(dim_value);
    if (!doc.contains("ops") || !doc.at("ops").is_array() || doc.at("ops").empty()) {
      throw ParseError("kraus channel spec needs a non-empty \"ops\" array");
    }
    std::vector<ComplexMatrix> ops;
    for (const Json& op : doc.at("ops")) {
      ops.push_back(parse_kraus_op(op, dim));
    }
    return ChannelSpec{type, KrausChannel(std::move(ops)), std::nullopt};
  }
  throw ParseError("unknown channel type \"" + type + "\"");
}

ChannelSpec load_channel_spec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open channel spec " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_channel_spec(buf.str());
}

}  // namespace chanpur::qcore
