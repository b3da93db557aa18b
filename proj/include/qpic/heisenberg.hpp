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

#include <map>
#include <string>

#include "qpic/conjugation.hpp"
#include "qpic/statevector.hpp"

namespace qpic {

/// Heisenberg-picture backend: a fixed initial state plus a set of named
/// observables that carry all of the dynamics. Frames are immutable;
/// evolve_frame returns a new one.
class ObservableFrame {
 public:
  ObservableFrame(StateVector fixed_state, std::map<std::string, PauliSum> observables);

  std::size_t num_qubits() const { return fixed_state_.num_qubits(); }
  const StateVector& fixed_state() const { return fixed_state_; }
  const std::map<std::string, PauliSum>& observables() const { return observables_; }
  const PauliSum& observable(const std::string& name) const;

  /// Frame with X_q named "X0", "X1", ... plus matching "Y*"/"Z*" families.
  static ObservableFrame pauli_frame(StateVector fixed_state);

  /// One observable per line: "name = <PauliSum text>". Round-trips.
  std::string str() const;
  static ObservableFrame parse(std::string_view text, StateVector fixed_state);

 private:
  StateVector fixed_state_;
  std::map<std::string, PauliSum> observables_;
};

/// Parses "name = <PauliSum text>" lines ('#' comments allowed).
std::map<std::string, PauliSum> parse_named_observables(std::string_view text);

/// Every named observable conjugated through the circuit (O -> U' O U).
ObservableFrame evolve_frame(const ObservableFrame& frame, const Circuit& c);

/// Expectation of a named observable in the frame's fixed initial state.
Complex heisenberg_expectation(const ObservableFrame& frame, const std::string& name);

/// Product of two named observables, formed at query time.
Complex heisenberg_product_expectation(const ObservableFrame& frame, const std::string& a,
                                       const std::string& b);

/// The moving-basis view: |a_t> = U'|a>, so the evolved basis compensates
/// the state's motion and the state keeps its coordinates.
StateVector backward_evolve_state(const StateVector& a, const Circuit& c);

/// Projector |a_t><a_t| onto the backward-evolved basis vector.
dense::Matrix evolve_basis_projector(const StateVector& a, const Circuit& c);

}  // namespace qpic
