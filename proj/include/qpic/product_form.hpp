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

#include <string>
#include <vector>

#include "qpic/conjugation.hpp"
#include "qpic/gates.hpp"
#include "qpic/pauli.hpp"

namespace qpic {

/// One gate application recorded against a factor it changed.
struct ProvenanceRecord {
  std::size_t seq;  // 1-based position in the state's gate history
  GateOp gate;

  bool operator==(const ProvenanceRecord& other) const = default;
};

/// Factored density matrix rho = prod_j (I + G_j)/2 with ordinary (not
/// tensor) products between the factors. Factor order is fixed at
/// initialization; since the generators commute, expand() does not depend
/// on it. Provenance is metadata only: the physics never reads it.
class FactoredState {
 public:
  /// Generators [X_0, X_1, ...]: the |+>^n start.
  static FactoredState init_plus(std::size_t n);

  /// General stabilizer-style start from n signed strings. The strings
  /// must be Hermitian, pairwise commuting and independent.
  static FactoredState init_from_strings(const std::vector<PauliString>& generators);

  /// Product ket over {0,1,+,-} as a factored state: |0> -> Z, |1> -> -Z,
  /// |+> -> X, |-> -> -X. Accepts the same "|...>" wrapper as StateVector.
  static FactoredState from_ket(std::string_view ket);

  std::size_t num_qubits() const { return n_; }
  std::size_t factor_count() const { return generators_.size(); }
  const std::vector<PauliSum>& generators() const { return generators_; }
  const PauliSum& generator(std::size_t j) const { return generators_.at(j); }
  const std::vector<std::vector<ProvenanceRecord>>& provenance() const { return provenance_; }
  std::size_t gates_applied() const { return seq_; }

  /// One line per factor: "j: <PauliSum text> | provenance: seq:GATE, ...".
  std::string str() const;
  static FactoredState parse(std::string_view text);

  bool operator==(const FactoredState& other) const = default;

  friend FactoredState evolve(const FactoredState& s, const GateOp& g);

 private:
  FactoredState() = default;

  std::size_t n_ = 0;
  std::vector<PauliSum> generators_;
  std::vector<std::vector<ProvenanceRecord>> provenance_;
  std::size_t seq_ = 0;
};

/// Compares generators: exact for single-string generators, coefficientwise
/// within kZeroTol once a factor has become a genuine sum.
bool generator_changed(const PauliSum& before, const PauliSum& after);

/// Schrodinger step rho -> U rho U', applied factorwise: G_j -> U G_j U'.
/// Provenance is appended exactly to the factors whose generator changed.
FactoredState evolve(const FactoredState& s, const GateOp& g);
FactoredState evolve(const FactoredState& s, const Circuit& c);

/// Multiplies the factors out into a canonical PauliSum.
PauliSum expand(const FactoredState& s);

/// Indices of factors whose generator differs between the two states.
std::vector<std::size_t> changed_factors(const FactoredState& before,
                                         const FactoredState& after);

/// tr(rho O) straight from the expansion coefficients.
Complex factored_expectation(const FactoredState& s, const PauliSum& obs);

}  // namespace qpic
