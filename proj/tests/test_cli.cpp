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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

namespace fs = std::filesystem;

struct CommandResult {
  int exit_code;
  std::string output;
};

// Runs a command, captures stdout+stderr, returns the raw exit code.
CommandResult run(const std::string& command) {
  const fs::path capture = fs::temp_directory_path() / "qpic_cli_capture.txt";
  const int status = std::system((command + " > " + capture.string() + " 2>&1").c_str());
  std::ifstream in(capture);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  int code = -1;
  if (status != -1 && WIFEXITED(status)) code = WEXITSTATUS(status);
  return {code, buffer.str()};
}

const std::string kBinary = QPIC_CLI_PATH;
const std::string kMutant = QPIC_CLI_MUTANT_PATH;

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("every scenario exits 0 and writes both report files") {
  const fs::path out = fresh_dir("qpic_cli_scenarios");
  const std::string common = " --out-dir " + out.string();
  const std::vector<std::pair<std::string, std::string>> runs = {
      {"cz-entangler", ""},
      {"bell-phase-kick", ""},
      {"data-hiding", ""},
      {"chsh", " --samples 500"},
      {"einstein-audit", ""},
      {"classical-collision", " --samples 20000"},
      {"picture-equivalence", " --seeds 15"},
  };
  for (const auto& [name, extra] : runs) {
    CAPTURE(name);
    const auto result = run(kBinary + " scenario " + name + extra + common);
    CHECK(result.exit_code == 0);
    CHECK(fs::exists(out / (name + ".json")));
    CHECK(fs::exists(out / (name + ".md")));
  }
}

TEST_CASE("unknown scenarios and bad flags are usage errors") {
  CHECK(run(kBinary + " scenario warp-drive").exit_code == 1);
  CHECK(run(kBinary + " scenario").exit_code == 1);
  CHECK(run(kBinary + " --format yaml scenario chsh").exit_code == 1);
  CHECK(run(kBinary).exit_code == 1);
}

TEST_CASE("the run subcommand compares the three backends") {
  const fs::path dir = fresh_dir("qpic_cli_run");
  const fs::path circuit = dir / "entangler.qc";
  const fs::path observables = dir / "obs.txt";
  {
    std::ofstream c(circuit);
    c << "qubits 2\nCZ 0 1\n";
    std::ofstream o(observables);
    o << "sxz = 1*XZ\nszx = 1*ZX\nsyy = 1*YY\n";
  }
  const auto result = run(kBinary + " run --circuit " + circuit.string() +
                          " --initial ++ --observables " + observables.string() +
                          " --out-dir " + dir.string() + " --format json");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("\"pass\": true") != std::string::npos);

  // empty circuit on |0> measured in Z: every backend reports 1
  const fs::path empty = dir / "empty.qc";
  const fs::path z_obs = dir / "z.txt";
  {
    std::ofstream c(empty);
    c << "qubits 1\n";
    std::ofstream o(z_obs);
    o << "z = 1*Z\n";
  }
  const auto trivial = run(kBinary + " run --circuit " + empty.string() +
                           " --initial 0 --observables " + z_obs.string() + " --out-dir " +
                           dir.string());
  CHECK(trivial.exit_code == 0);
}

TEST_CASE("malformed circuit files fail with the offending line named") {
  const fs::path dir = fresh_dir("qpic_cli_bad");
  const fs::path circuit = dir / "bad.qc";
  const fs::path observables = dir / "obs.txt";
  {
    std::ofstream c(circuit);
    c << "H 0\nWOBBLE 1\n";
    std::ofstream o(observables);
    o << "z = 1*ZZ\n";
  }
  const auto result = run(kBinary + " run --circuit " + circuit.string() +
                          " --initial 00 --observables " + observables.string() +
                          " --out-dir " + dir.string());
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("line 2") != std::string::npos);

  const auto missing = run(kBinary + " run --circuit /no/such/file --initial 0 " +
                           "--observables " + observables.string());
  CHECK(missing.exit_code == 1);
}

TEST_CASE("reports are byte-identical for a fixed seed") {
  const fs::path a = fresh_dir("qpic_cli_det_a");
  const fs::path b = fresh_dir("qpic_cli_det_b");
  const std::string args = " scenario chsh --samples 300 --seed 7 --format json --out-dir ";
  const auto first = run(kBinary + args + a.string());
  const auto second = run(kBinary + args + b.string());
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);

  std::ifstream fa(a / "chsh.json"), fb(b / "chsh.json");
  std::ostringstream ca, cb;
  ca << fa.rdbuf();
  cb << fb.rdbuf();
  CHECK(ca.str() == cb.str());
  CHECK(!ca.str().empty());
}

TEST_CASE("the CZ sign mutant is caught by the affected scenarios") {
  const fs::path out = fresh_dir("qpic_cli_mutant");
  const std::string common = " --out-dir " + out.string();
  CHECK(run(kMutant + " scenario cz-entangler" + common).exit_code == 2);
  CHECK(run(kMutant + " scenario picture-equivalence --seeds 15" + common).exit_code == 2);
  // scenarios that never conjugate through CZ still pass
  CHECK(run(kMutant + " scenario data-hiding" + common).exit_code == 0);
  CHECK(run(kMutant + " scenario classical-collision --samples 20000" + common).exit_code ==
        0);
}
