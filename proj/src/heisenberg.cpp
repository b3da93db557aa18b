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

#include "qpic/heisenberg.hpp"

#include <sstream>
#include <stdexcept>

namespace qpic {

ObservableFrame::ObservableFrame(StateVector fixed_state,
                                 std::map<std::string, PauliSum> observables)
    : fixed_state_(std::move(fixed_state)), observables_(std::move(observables)) {
  for (const auto& [name, obs] : observables_) {
    if (obs.num_qubits() != fixed_state_.num_qubits()) {
      throw std::invalid_argument("observable '" + name + "' does not fit the frame");
    }
    if (!obs.is_hermitian()) {
      throw std::invalid_argument("observable '" + name + "' is not Hermitian");
    }
  }
}

const PauliSum& ObservableFrame::observable(const std::string& name) const {
  auto it = observables_.find(name);
  if (it == observables_.end()) {
    throw std::invalid_argument("unknown observable '" + name + "'");
  }
  return it->second;
}

ObservableFrame ObservableFrame::pauli_frame(StateVector fixed_state) {
  const std::size_t n = fixed_state.num_qubits();
  std::map<std::string, PauliSum> observables;
  for (std::size_t q = 0; q < n; ++q) {
    observables.emplace("X" + std::to_string(q),
                        PauliSum::from_string(PauliString::single(n, q, Letter::X)));
    observables.emplace("Y" + std::to_string(q),
                        PauliSum::from_string(PauliString::single(n, q, Letter::Y)));
    observables.emplace("Z" + std::to_string(q),
                        PauliSum::from_string(PauliString::single(n, q, Letter::Z)));
  }
  return ObservableFrame(std::move(fixed_state), std::move(observables));
}

std::string ObservableFrame::str() const {
  std::string out;
  for (const auto& [name, obs] : observables_) {
    out += name + " = " + obs.str() + "\n";
  }
  return out;
}

std::map<std::string, PauliSum> parse_named_observables(std::string_view text) {
  std::map<std::string, PauliSum> observables;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("observables line " + std::to_string(line_no) +
                                  ": expected 'name = sum'");
    }
    std::string name = line.substr(start, eq - start);
    while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
    if (name.empty()) {
      throw std::invalid_argument("observables line " + std::to_string(line_no) +
                                  ": empty name");
    }
    if (observables.count(name)) {
      throw std::invalid_argument("observables line " + std::to_string(line_no) +
                                  ": duplicate name '" + name + "'");
    }
    try {
      observables.emplace(name, PauliSum::parse(line.substr(eq + 1)));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("observables line " + std::to_string(line_no) + ": " +
                                  e.what());
    }
  }
  return observables;
}

ObservableFrame ObservableFrame::parse(std::string_view text, StateVector fixed_state) {
  return ObservableFrame(std::move(fixed_state), parse_named_observables(text));
}

ObservableFrame evolve_frame(const ObservableFrame& frame, const Circuit& c) {
  if (c.n != frame.num_qubits()) {
    throw std::invalid_argument("circuit does not fit the frame");
  }
  std::map<std::string, PauliSum> moved;
  for (const auto& [name, obs] : frame.observables()) {
    moved.emplace(name, conjugate(obs, c, ConjugationDirection::Heisenberg));
  }
  return ObservableFrame(frame.fixed_state(), std::move(moved));
}

Complex heisenberg_expectation(const ObservableFrame& frame, const std::string& name) {
  return expectation(frame.fixed_state(), frame.observable(name));
}

Complex heisenberg_product_expectation(const ObservableFrame& frame, const std::string& a,
                                       const std::string& b) {
  return expectation(frame.fixed_state(), frame.observable(a) * frame.observable(b));
}

StateVector backward_evolve_state(const StateVector& a, const Circuit& c) {
  if (c.n != a.num_qubits()) {
    throw std::invalid_argument("circuit and state qubit counts differ");
  }
  // U'|a> for U = U_k ... U_1: apply the inverses in reverse order.
  StateVector state = a;
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    state = apply_gate(state, it->inverse());
  }
  return state;
}

dense::Matrix evolve_basis_projector(const StateVector& a, const Circuit& c) {
  return projector(backward_evolve_state(a, c));
}

}  // namespace qpic
