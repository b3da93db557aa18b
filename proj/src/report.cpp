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

#include "qpic/report.hpp"

#include <algorithm>

namespace qpic {

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Json Report::to_json() const {
  Json out;
  out["title"] = title;
  out["pass"] = pass();
  out["params"] = params;
  Json check_list = Json::array();
  for (const Check& c : checks) {
    Json entry;
    entry["name"] = c.name;
    entry["pass"] = c.pass;
    entry["details"] = c.details;
    check_list.push_back(std::move(entry));
  }
  out["checks"] = std::move(check_list);
  if (!extra.empty()) {
    out["extra"] = extra;
  }
  return out;
}

std::string Report::to_markdown() const {
  std::string out = "# " + title + "\n\n";
  out += std::string("Overall: ") + (pass() ? "PASS" : "FAIL") + "\n\n";
  if (!params.empty()) {
    out += "Parameters: `" + params.dump() + "`\n\n";
  }
  out += "| check | result | details |\n|---|---|---|\n";
  for (const Check& c : checks) {
    std::string details = c.details;
    std::replace(details.begin(), details.end(), '\n', ' ');
    std::replace(details.begin(), details.end(), '|', '/');
    out += "| " + c.name + " | " + (c.pass ? "pass" : "FAIL") + " | " + details + " |\n";
  }
  return out;
}

}  // namespace qpic
