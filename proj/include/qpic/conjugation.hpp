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

#include "qpic/gates.hpp"
#include "qpic/pauli.hpp"

namespace qpic {

/// Which way an operator is dragged through a unitary.
enum class ConjugationDirection {
  Heisenberg,   // P -> U' P U   (observables; "backwards in time")
  Schrodinger,  // P -> U P U'   (density operators / generators)
};

/// True for gates whose conjugation maps a single string to a single
/// signed string with exact integer phase (everything except PHASE).
bool is_clifford(const GateOp& g);

/// Exact Clifford conjugation. Throws for PHASE gates.
PauliString conjugate_string_clifford(const PauliString& p, const GateOp& g,
                                      ConjugationDirection dir);

/// Conjugation of a single string by any gate in the set. Clifford gates
/// give a one-term sum with coefficient exactly +/-1 or +/-i; PHASE(phi)
/// rotates X/Y on the kicked qubit by the cos/sin rule and leaves Z and I
/// alone. Coefficients below kZeroTol are pruned, so phi = pi lands on the
/// exact sign flip.
PauliSum conjugate_string(const PauliString& p, const GateOp& g, ConjugationDirection dir);

PauliSum conjugate(const PauliSum& obs, const GateOp& g, ConjugationDirection dir);

/// Whole-circuit conjugation. With U = U_k ... U_1 (gates applied in list
/// order to states), the Heisenberg result is U' O U, assembled from the
/// innermost factor outwards, i.e. the gate list is traversed in reverse.
/// The Schrodinger direction composes forwards: U ( ... ) U'.
PauliSum conjugate(const PauliSum& obs, const Circuit& c, ConjugationDirection dir);

}  // namespace qpic
