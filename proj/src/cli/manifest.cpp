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

#include "chanpur/cli/manifest.hpp"

#include <chrono>
#include <ctime>

#include "chanpur/error.hpp"

namespace chanpur::cli {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json to_json(const RunManifest& m) {
  Json j;
  j["tool"] = "chanpur";
  j["version"] = m.version;
  j["command"] = m.command;
  j["argv"] = m.argv;
  j["config"] = m.config;
  j["seed"] = m.seed;
  j["artifacts"] = m.artifacts;
  j["timestamp"] = m.timestamp;
  return j;
}

RunManifest manifest_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("argv") || !j["argv"].is_array()) {
    throw ParseError("manifest needs an \"argv\" array");
  }
  RunManifest m;
  for (const Json& a : j["argv"]) {
    if (!a.is_string()) {
      throw ParseError("manifest argv entries must be strings");
    }
    m.argv.push_back(a.get<std::string>());
  }
  if (j.contains("command") && j["command"].is_string()) {
    m.command = j["command"].get<std::string>();
  }
  if (j.contains("config")) {
    m.config = j["config"];
  }
  if (j.contains("artifacts") && j["artifacts"].is_array()) {
    for (const Json& a : j["artifacts"]) {
      if (!a.is_string()) {
        throw ParseError("manifest artifact entries must be strings");
      }
      m.artifacts.push_back(a.get<std::string>());
    }
  }
  if (j.contains("seed") && j["seed"].is_number_unsigned()) {
    m.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("version") && j["version"].is_string()) {
    m.version = j["version"].get<std::string>();
  }
  if (j.contains("timestamp") && j["timestamp"].is_string()) {
    m.timestamp = j["timestamp"].get<std::string>();
  }
  return m;
}

std::string manifest_path_for(const std::string& artifact_path) {
  return artifact_path + ".manifest.json";
}

}  // namespace chanpur::cli
