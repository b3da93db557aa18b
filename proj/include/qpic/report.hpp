// Copyright 2026 The qpic Authors
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

#include <string>
#include <vector>

#include <json.hpp>

namespace qpic {

using Json = nlohmann::ordered_json;

/// One named pass/fail line inside a report.
struct Check {
  std::string name;
  bool pass = false;
  std::string details;
};

/// Scenario output: a deterministic JSON tree plus a markdown rendering.
/// Field order is fixed so byte-identical runs stay byte-identical.
struct Report {
  std::string title;
  Json params = Json::object();
  std::vector<Check> checks;
  Json extra = Json::object();

  bool pass() const;
  Json to_json() const;
  std::string to_markdown() const;
};

}  // namespace qpic
