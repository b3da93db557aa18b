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

#include <vector>

#include "qpic/pauli.hpp"
#include "qpic/product_form.hpp"
#include "qpic/statevector.hpp"

namespace qpic {

/// A pure stabilizer state, held as n independent commuting signed strings.
struct StabilizerState {
  std::vector<PauliString> generators;
};

/// All pure stabilizer states on n qubits, enumerated as the orbit of
/// |0...0> under {H, S, CZ} and keyed by the full stabilizer group.
/// Counts are 6, 60, 1080, 36720 for n = 1..4; practical up to n = 4.
std::vector<StabilizerState> enumerate_stabilizer_states(std::size_t n);

FactoredState to_factored(const StabilizerState& s);

/// The stabilized vector, extracted from the dense projector.
StateVector to_statevector(const StabilizerState& s);

}  // namespace qpic
