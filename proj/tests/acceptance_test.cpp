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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qpic/conjugation.hpp"
#include "qpic/dense.hpp"
#include "qpic/locality.hpp"
#include "qpic/product_form.hpp"
#include "qpic/scenarios.hpp"
#include "qpic/stabilizer_states.hpp"
#include "qpic/statevector.hpp"

using namespace qpic;

namespace {

struct Outcome {
  bool pass;
  std::string details;
};

Outcome from_report(const Report& report) {
  std::string details;
  bool pass = true;
  for (const Check& c : report.checks) {
    pass = pass && c.pass;
    if (!c.pass) {
      details += (details.empty() ? "" : "; ") + c.name + ": " + c.details;
    }
  }
  if (details.empty()) {
    for (const Check& c : report.checks) {
      details += (details.empty() ? "" : "; ") + c.details;
    }
  }
  return {pass, details};
}

PauliSum quarter_sum(double xz, double zx, double yy) {
  PauliSum target(2);
  target.add_term("II", 0.25);
  target.add_term("XZ", 0.25 * xz);
  target.add_term("ZX", 0.25 * zx);
  target.add_term("YY", 0.25 * yy);
  return target;
}

Outcome criterion1_entangler_generators() {
  const FactoredState after = evolve(FactoredState::init_plus(2), GateOp::cz(0, 1));
  PauliString g0 = PauliString::identity(2);
  PauliString g1 = PauliString::identity(2);
  const bool exact = after.generator(0).as_single_string(g0) &&
                     after.generator(1).as_single_string(g1) &&
                     g0 == PauliString::parse("+XZ") && g1 == PauliString::parse("+ZX");
  return {exact, "generators [" + after.generator(0).str() + ", " +
                     after.generator(1).str() + "]"};
}

Outcome criterion2_expansion() {
  const FactoredState after = evolve(FactoredState::init_plus(2), GateOp::cz(0, 1));
  const PauliSum expanded = expand(after);
  const bool termwise = expanded == quarter_sum(1.0, 1.0, 1.0);

  const dense::Matrix rho = dense::to_dense(expanded);
  const double trace_err = std::abs(rho.trace() - Complex{1.0, 0.0});
  const Eigen::VectorXd eigs = dense::hermitian_eigenvalues(rho);
  double eig_err = std::abs(eigs(3) - 1.0);
  for (int i = 0; i < 3; ++i) eig_err = std::max(eig_err, std::abs(eigs(i)));

  std::ostringstream details;
  details << "termwise " << (termwise ? "exact" : "WRONG") << ", trace error " << trace_err
          << ", eigenvalue error " << eig_err;
  return {termwise && trace_err <= 1e-10 && eig_err <= 1e-10, details.str()};
}

Outcome criterion3_kick_provenance() {
  const FactoredState entangled = evolve(FactoredState::init_plus(2), GateOp::cz(0, 1));
  const FactoredState kicked = evolve(entangled, GateOp::phase(0, M_PI));

  PauliString g0 = PauliString::identity(2);
  const bool sign_flip =
      kicked.generator(0).as_single_string(g0) && g0 == PauliString::parse("-XZ");
  const bool only_factor0 =
      changed_factors(entangled, kicked) == std::vector<std::size_t>{0};
  const bool expansion_exact = expand(kicked) == quarter_sum(-1.0, 1.0, -1.0);
  return {sign_flip && only_factor0 && expansion_exact,
          "factor 0 -> " + kicked.generator(0).str() + ", changed {0}: " +
              (only_factor0 ? "yes" : "no") + ", expansion exact: " +
              (expansion_exact ? "yes" : "no")};
}

Outcome criterion4_einstein_locality() {
  std::vector<GateOp> gates = {GateOp::h(0),
                               GateOp::s(0),
                               GateOp::x(0),
                               GateOp::y(0),
                               GateOp::z(0),
                               GateOp::phase(0, M_PI / 7.0),
                               GateOp::phase(0, M_PI / 3.0),
                               GateOp::phase(0, M_PI)};

  std::size_t conjugations = 0;
  for (const GateOp& g : gates) {
    for (Letter l : {Letter::X, Letter::Y, Letter::Z}) {
      const PauliString remote = PauliString::single(2, 1, l);
      PauliString moved = PauliString::identity(2);
      const bool fixed = conjugate_string(remote, g, ConjugationDirection::Heisenberg)
                             .as_single_string(moved) &&
                         moved == remote;
      ++conjugations;
      if (!fixed) {
        return {false, remote.str() + " moved under " + g.str()};
      }
    }
  }

  const auto states = enumerate_stabilizer_states(2);
  double worst = 0.0;
  for (const auto& state : states) {
    const StateVector psi = to_statevector(state);
    const dense::Matrix before = reduced_density_matrix(psi, {1});
    for (const GateOp& g : gates) {
      const dense::Matrix after = reduced_density_matrix(apply_gate(psi, g), {1});
      worst = std::max(worst, dense::max_abs_diff(before, after));
    }
  }
  std::ostringstream details;
  details << conjugations << " exact conjugations, " << states.size()
          << " stabilizer states, max reduced-state deviation " << worst;
  return {worst <= 1e-12, details.str()};
}

Outcome criterion5_data_hiding() {
  const auto report = locality::data_hiding_check({0.0, M_PI / 7.0, M_PI / 3.0, 1.0, M_PI});
  std::ostringstream details;
  details << "max |rho_local - I/2| = " << report.max_deviation << " over "
          << report.entries.size() << " angles, both state families";
  return {report.pass, details.str()};
}

Outcome criterion6_picture_equivalence() {
  ScenarioOptions options;  // defaults: 100 seeds, n <= 5, depth <= 20
  return from_report(run_scenario("picture-equivalence", options));
}

Outcome criterion7_chsh() {
  ScenarioOptions options;  // defaults: 10^4 sweeps
  return from_report(run_scenario("chsh", options));
}

Outcome criterion8_indistinguishability() {
  const FactoredState bell_factored = FactoredState::init_from_strings(
      {PauliString::parse("XX"), PauliString::parse("ZZ")});
  const double inv = 1.0 / std::sqrt(2.0);
  const StateVector bell(2, {inv, 0.0, 0.0, inv});

  for (double phi : {M_PI, 1.0}) {
    const Circuit kick0(2, {GateOp::phase(0, phi)});
    const Circuit kick1(2, {GateOp::phase(1, phi)});
    const auto report =
        locality::indistinguishability_check(kick0, kick1, bell, bell_factored);
    const bool ok = report.states_equal && report.overlap >= 1.0 - 1e-10 &&
                    report.provenance_differs && report.expanded_equal;
    if (!ok) {
      std::ostringstream details;
      details << "phi=" << phi << ": overlap " << report.overlap << ", provenance differs "
              << report.provenance_differs << ", expanded equal " << report.expanded_equal;
      return {false, details.str()};
    }
  }
  return {true, "kicks at phi = pi and 1.0: states equal, provenances differ, "
                "expansions termwise equal"};
}

Outcome criterion9_classical() {
  ScenarioOptions options;  // defaults: 10^5 seeded samples
  return from_report(run_scenario("classical-collision", options));
}

int run_cli(const std::string& command) {
  const int status = std::system((command + " > /dev/null 2>&1").c_str());
  return (status != -1 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
}

Outcome criterion10_cli_contract() {
  namespace fs = std::filesystem;
  const std::string binary = QPIC_CLI_PATH;
  const std::string mutant = QPIC_CLI_MUTANT_PATH;
  const fs::path out = fs::temp_directory_path() / "qpic_acceptance_cli";
  fs::remove_all(out);
  const std::string common = " --out-dir " + out.string();

  const std::vector<std::string> scenario_args = {
      "cz-entangler", "bell-phase-kick", "data-hiding", "chsh --samples 2000",
      "einstein-audit", "classical-collision --samples 20000",
      "picture-equivalence --seeds 25"};
  for (const std::string& args : scenario_args) {
    if (run_cli(binary + " scenario " + args + common) != 0) {
      return {false, "scenario '" + args + "' did not exit 0"};
    }
  }
  if (run_cli(binary + " scenario warp-drive" + common) != 1) {
    return {false, "unknown scenario did not exit 1"};
  }
  if (run_cli(mutant + " scenario cz-entangler" + common) != 2) {
    return {false, "CZ-sign mutant passed cz-entangler"};
  }
  if (run_cli(mutant + " scenario picture-equivalence --seeds 25" + common) != 2) {
    return {false, "CZ-sign mutant passed picture-equivalence"};
  }
  return {true, "7 scenarios exit 0; unknown name exits 1; CZ-sign mutant exits 2 on "
                "cz-entangler and picture-equivalence"};
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "entangler turns the plus start into [XZ, ZX] exactly",
       criterion1_entangler_generators},
      {2, "expansion is the exact four-term quarter sum and a rank-1 projector",
       criterion2_expansion},
      {3, "pi kick flips only factor 0 and the expansion signs", criterion3_kick_provenance},
      {4, "Einstein locality, exhaustive at two qubits", criterion4_einstein_locality},
      {5, "data hiding: local reductions are phase-blind", criterion5_data_hiding},
      {6, "picture equivalence across 100 random circuits", criterion6_picture_equivalence},
      {7, "CHSH: Tsirelson value, bound sweeps, classical bound", criterion7_chsh},
      {8, "indistinguishable kicks with distinguishable provenance",
       criterion8_indistinguishability},
      {9, "classical collision: conservation and correlation build-up", criterion9_classical},
      {10, "CLI contract, including the CZ-sign mutation test", criterion10_cli_contract},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome{false, "exception"};
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << criterion.number
              << ": " << criterion.name << " - " << outcome.details << " (" << elapsed
              << " ms)\n";
    if (!outcome.pass) ++failures;
  }
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
  } else {
    std::cout << "all 10 criteria passed\n";
  }
  return failures;
}
