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

#include "qpic/dense.hpp"
#include "qpic/gates.hpp"
#include "qpic/pauli.hpp"

namespace qpic {

/// State-vector backend: states move, observables stay fixed.
///
/// Basis index convention: qubit 0 is the most significant bit, matching
/// the tensor ordering of the Pauli layer (qubit 0 = leftmost factor).
/// Global phase is never normalized away; use overlap_magnitude for
/// phase-insensitive comparisons.
class StateVector {
 public:
  /// |0...0> on n qubits.
  explicit StateVector(std::size_t n);
  StateVector(std::size_t n, std::vector<Complex> amplitudes);

  /// Builds a product ket from per-qubit characters in {0,1,+,-},
  /// e.g. "++" for |+>|+>. An optional "|...>" wrapper is accepted.
  static StateVector from_ket(std::string_view ket);

  std::size_t num_qubits() const { return n_; }
  std::size_t dim() const { return amplitudes_.size(); }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }
  Complex amplitude(std::size_t basis_index) const { return amplitudes_.at(basis_index); }

  double norm() const;

  bool operator==(const StateVector& other) const = default;

 private:
  std::size_t n_;
  std::vector<Complex> amplitudes_;
};

/// |psi> -> U|psi>; the input state is left untouched.
StateVector apply_gate(const StateVector& state, const GateOp& g);

/// Applies a phased Pauli word: |psi> -> P|psi>.
StateVector apply_pauli(const StateVector& state, const PauliString& p);

/// Left-to-right gate application.
StateVector run_circuit(const Circuit& c, const StateVector& initial);

/// <psi|O|psi>. Hermitian O gives a real value up to rounding.
Complex expectation(const StateVector& state, const PauliSum& obs);
Complex expectation(const StateVector& state, const PauliString& obs);

/// <a|b>.
Complex overlap(const StateVector& a, const StateVector& b);

/// |<a|b>|; two unit states are equal up to global phase iff this is 1.
double overlap_magnitude(const StateVector& a, const StateVector& b);

/// Tolerance for the equal-up-to-global-phase predicate.
inline constexpr double kPhaseEqTol = 1e-10;
bool equal_up_to_global_phase(const StateVector& a, const StateVector& b);

/// Partial trace onto `keep` (ascending qubit order; the first kept qubit
/// becomes the most significant bit of the reduced index).
dense::Matrix reduced_density_matrix(const StateVector& state,
                                     const std::vector<std::size_t>& keep);

/// Column vector / projector views for the dense oracle.
dense::Vector to_dense(const StateVector& state);
dense::Matrix projector(const StateVector& state);

}  // namespace qpic
