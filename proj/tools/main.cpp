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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qpic/heisenberg.hpp"
#include "qpic/scenarios.hpp"

namespace {

// Exit-code contract: 0 pass, 1 usage/input error, 2 check failure,
// 3 internal error.
constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailure = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int emit_report(const qpic::Report& report, const std::string& out_dir,
                const std::string& stem, const std::string& format) {
  std::filesystem::create_directories(out_dir);
  const std::string json_text = report.to_json().dump(2) + "\n";
  const std::string md_text = report.to_markdown();
  {
    std::ofstream json_out(out_dir + "/" + stem + ".json", std::ios::binary);
    json_out << json_text;
    std::ofstream md_out(out_dir + "/" + stem + ".md", std::ios::binary);
    md_out << md_text;
  }
  std::cout << (format == "json" ? json_text : md_text);
  return report.pass() ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-backend qubit simulator: picture equivalence and locality checks"};
  app.require_subcommand(1);
  app.fallthrough();  // --out-dir/--format may follow the subcommand

  std::string out_dir = "reports";
  std::string format = "md";
  app.add_option("--out-dir", out_dir, "directory for the JSON/markdown reports")
      ->capture_default_str();
  app.add_option("--format", format, "stdout format")
      ->check(CLI::IsMember({"json", "md"}))
      ->capture_default_str();

  auto* scenario_cmd = app.add_subcommand("scenario", "run a named end-to-end scenario");
  std::string scenario_name;
  qpic::ScenarioOptions options;
  double phi_value = 0.0;
  scenario_cmd
      ->add_option("name", scenario_name,
                   "one of: bell-phase-kick, cz-entangler, data-hiding, chsh, "
                   "einstein-audit, classical-collision, picture-equivalence")
      ->required();
  scenario_cmd->add_option("--qubits", options.qubits, "qubit count (scenario default if 0)");
  scenario_cmd->add_option("--depth", options.depth, "max random-circuit depth");
  scenario_cmd->add_option("--seeds", options.seeds, "number of random instances");
  auto* phi_opt = scenario_cmd->add_option("--phi", phi_value, "kick angle in radians");
  scenario_cmd->add_option("--samples", options.samples,
                           "sample/sweep count (scenario default if 0)");
  scenario_cmd->add_option("--seed", options.seed, "master RNG seed");

  auto* run_cmd = app.add_subcommand("run", "compare all backends on a circuit file");
  std::string circuit_path;
  std::string initial_ket = "0";
  std::string observables_path;
  run_cmd->add_option("--circuit", circuit_path, "circuit file")->required();
  run_cmd->add_option("--initial", initial_ket, "initial product ket over {0,1,+,-}")
      ->capture_default_str();
  run_cmd->add_option("--observables", observables_path, "'name = sum' observable file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (scenario_cmd->parsed()) {
      if (phi_opt->count() > 0) options.phi = phi_value;
      qpic::Report report;
      try {
        report = qpic::run_scenario(scenario_name, options);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      return emit_report(report, out_dir, scenario_name, format);
    }

    // run subcommand
    qpic::Report report;
    try {
      const qpic::Circuit circuit = qpic::Circuit::parse(read_file(circuit_path));
      const auto observables = qpic::parse_named_observables(read_file(observables_path));
      report = qpic::run_backend_comparison(circuit, initial_ket, observables);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    return emit_report(report, out_dir, "run", format);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
