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

#include <optional>
#include <string>
#include <vector>

#include "qpic/product_form.hpp"
#include "qpic/report.hpp"
#include "qpic/rng.hpp"
#include "qpic/statevector.hpp"

namespace qpic::locality {

/// Tolerance for "the remote reduced state did not move".
inline constexpr double kReducedStateTol = 1e-12;

/// A gate acting inside `region` cannot move anything outside it. The
/// audit verifies that in all three backends at once:
///  (a) Heisenberg: every string supported outside the region is exactly
///      invariant under conjugation by the gate;
///  (b) product form: only factors whose generator currently touches the
///      gate support can change, and every change is attributed to this
///      gate in the factor's provenance;
///  (c) Schrodinger: the reduced density matrix outside the region is
///      unchanged within kReducedStateTol.
struct AuditReport {
  bool heisenberg_pass = false;
  std::size_t heisenberg_checked = 0;
  std::vector<std::string> moved_observables;  // witnesses for (a)

  bool product_pass = false;
  std::vector<std::size_t> changed;        // factors changed by the gate
  std::vector<std::size_t> unattributed;   // witnesses for (b)
  bool provenance_ok = false;

  bool schrodinger_pass = false;
  double reduced_deviation = 0.0;

  bool pass() const { return heisenberg_pass && product_pass && schrodinger_pass; }
  Json to_json() const;
};

/// Precondition: support(g) is contained in region. `history` prepares the
/// state the gate acts on, starting from `initial`. Passing `prepared`
/// (the state vector of `initial` already run through `history`) skips the
/// dense eigenvector extraction; sweeps use it to share work per state.
AuditReport einstein_locality_audit(const FactoredState& initial, const Circuit& history,
                                    const GateOp& g, const std::vector<std::size_t>& region,
                                    const std::optional<StateVector>& prepared = std::nullopt);

/// Phase kicks on one side of an entangled pair leave every local reduced
/// state maximally mixed. Checks both the computational-basis Bell family
/// |00> + e^{i phi}|11> and the CZ-entangled family |0+> + e^{i phi}|1->.
struct DataHidingReport {
  struct Entry {
    double phi;
    double bell_deviation;     // max |rho_local - I/2| over both qubits
    double entangler_deviation;
  };
  std::vector<Entry> entries;
  double max_deviation = 0.0;
  bool pass = false;
  Json to_json() const;
};

DataHidingReport data_hiding_check(const std::vector<double>& phi_grid);

/// A measurement direction on the Bloch sphere; must be unit length.
struct BlochVector {
  double x = 0.0, y = 0.0, z = 0.0;

  static BlochVector random(Rng& rng);
  double norm() const;
  /// The observable n.(X,Y,Z) acting on one qubit of an n-qubit register.
  PauliSum observable(std::size_t n, std::size_t qubit) const;
};

/// E(a,b) = <A (x) B> on a two-qubit state.
double correlation(const StateVector& state, const BlochVector& a, const BlochVector& b);

/// E(a,b) + E(a,b') + E(a',b) - E(a',b').
double chsh_value(const StateVector& state, const BlochVector& a, const BlochVector& a_alt,
                  const BlochVector& b, const BlochVector& b_alt);

/// The settings that reach 2*sqrt(2) on the Bell state.
struct ChshSettings {
  BlochVector a, a_alt, b, b_alt;
};
ChshSettings optimal_chsh_settings();

/// Two circuits on the same initial state: do they hide which one ran?
/// Passes when the final states agree up to global phase while the
/// circuits (and hence the recorded provenances) differ.
struct IndistinguishabilityReport {
  bool circuits_differ = false;
  bool states_equal = false;
  double overlap = 0.0;
  bool provenance_differs = false;     // set when generators are provided
  bool expanded_equal = false;         // termwise, exact words + kZeroTol coeffs
  double expanded_diff = 0.0;
  std::string provenance_a, provenance_b;
  bool pass = false;
  Json to_json() const;
};

IndistinguishabilityReport indistinguishability_check(
    const Circuit& c1, const Circuit& c2, const StateVector& initial,
    const std::optional<FactoredState>& factored_initial = std::nullopt);

}  // namespace qpic::locality
