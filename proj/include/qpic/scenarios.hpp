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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpic/gates.hpp"
#include "qpic/report.hpp"
#include "qpic/rng.hpp"
#include "qpic/statevector.hpp"

namespace qpic {

struct ScenarioOptions {
  std::size_t qubits = 0;   // 0 = scenario default
  std::size_t depth = 20;
  std::size_t seeds = 100;
  std::optional<double> phi;
  std::size_t samples = 0;  // 0 = scenario default
  std::uint64_t seed = 1;
};

/// Available scenario names, in the order they are documented.
const std::vector<std::string>& scenario_names();

/// Runs one named end-to-end demonstration. Unknown names throw
/// std::invalid_argument; the result carries every check it performed.
Report run_scenario(const std::string& name, const ScenarioOptions& options);

/// Three-backend comparison of a circuit file run: Schrodinger state
/// evolution, Heisenberg observable conjugation and the factored product
/// form, expectation by expectation.
Report run_backend_comparison(const Circuit& circuit, const std::string& initial_ket,
                              const std::map<std::string, PauliSum>& observables);

/// Shared randomized-instance helpers (also used by the test suites).
Circuit random_circuit(Rng& rng, std::size_t n, std::size_t depth);
PauliString random_pauli_word(Rng& rng, std::size_t n);

}  // namespace qpic
