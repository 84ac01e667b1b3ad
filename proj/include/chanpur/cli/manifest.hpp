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

#ifndef CHANPUR_CLI_MANIFEST_HPP
#define CHANPUR_CLI_MANIFEST_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "chanpur/qcore/serialization.hpp"

namespace chanpur::cli {

/// Everything needed to re-run a command. Only `timestamp` varies between
/// otherwise identical runs.
struct RunManifest {
  std::string command;
  std::vector<std::string> argv;
  Json config;
  std::uint64_t seed = 0;
  std::vector<std::string> artifacts;
  std::string version;
  std::string timestamp;
};

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

Json to_json(const RunManifest& m);
RunManifest manifest_from_json(const Json& j);

/// Path of the manifest that accompanies an artifact.
std::string manifest_path_for(const std::string& artifact_path);

}  // namespace chanpur::cli

#endif  // CHANPUR_CLI_MANIFEST_HPP
