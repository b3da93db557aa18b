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

#include "qpic/locality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qpic/conjugation.hpp"
#include "qpic/dense.hpp"

namespace qpic::locality {

namespace {

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& region) {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < n; ++q) {
    if (std::find(region.begin(), region.end(), q) == region.end()) out.push_back(q);
  }
  return out;
}

// All nontrivial strings whose support lies inside `qubits`.
std::vector<PauliString> strings_supported_on(std::size_t n,
                                              const std::vector<std::size_t>& qubits) {
  std::vector<PauliString> out;
  std::size_t combos = 1;
  for (std::size_t i = 0; i < qubits.size(); ++i) combos *= 4;
  for (std::size_t code = 1; code < combos; ++code) {
    PauliString s = PauliString::identity(n);
    std::size_t rest = code;
    for (std::size_t q : qubits) {
      s = s.with_letter(q, static_cast<Letter>(rest % 4));
      rest /= 4;
    }
    out.push_back(std::move(s));
  }
  return out;
}

bool intersects(const std::vector<std::size_t>& sorted_support,
                const std::vector<std::size_t>& qubits) {
  for (std::size_t q : qubits) {
    if (std::binary_search(sorted_support.begin(), sorted_support.end(), q)) return true;
  }
  return false;
}

StateVector bell_phase_state(double phi) {
  const double inv = 1.0 / std::sqrt(2.0);
  const Complex kick = std::exp(Complex{0.0, 1.0} * phi);
  return StateVector(2, {inv, 0.0, 0.0, kick * inv});
}

StateVector entangler_phase_state(double phi) {
  // |0+> + e^{i phi} |1->, normalized
  const Complex kick = std::exp(Complex{0.0, 1.0} * phi);
  return StateVector(2, {0.5, 0.5, kick * 0.5, -kick * 0.5});
}

double max_deviation_from_mixed(const StateVector& state) {
  const dense::Matrix half = dense::Matrix::Identity(2, 2) * Complex{0.5, 0.0};
  double worst = 0.0;
  for (std::size_t q : {std::size_t{0}, std::size_t{1}}) {
    worst = std::max(worst, dense::max_abs_diff(reduced_density_matrix(state, {q}), half));
  }
  return worst;
}

// The stabilized vector of a pure factored state, via the dense projector.
StateVector factored_statevector(const FactoredState& s) {
  dense::Vector v = dense::top_eigenvector(dense::to_dense(expand(s)));
  std::vector<Complex> amps(v.data(), v.data() + v.size());
  return StateVector(s.num_qubits(), std::move(amps));
}

}  // namespace

Json AuditReport::to_json() const {
  Json out;
  out["pass"] = pass();
  out["heisenberg"] = {{"pass", heisenberg_pass},
                       {"observables_checked", heisenberg_checked},
                       {"moved", moved_observables}};
  out["product_form"] = {{"pass", product_pass},
                         {"changed_factors", changed},
                         {"unattributed_changes", unattributed},
                         {"provenance_ok", provenance_ok}};
  out["schrodinger"] = {{"pass", schrodinger_pass},
                        {"reduced_state_deviation", reduced_deviation}};
  return out;
}

AuditReport einstein_locality_audit(const FactoredState& initial, const Circuit& history,
                                    const GateOp& g, const std::vector<std::size_t>& region,
                                    const std::optional<StateVector>& prepared) {
  const std::size_t n = initial.num_qubits();
  g.validate(n);
  for (std::size_t q : g.support) {
    if (std::find(region.begin(), region.end(), q) == region.end()) {
      throw std::invalid_argument("gate support must lie inside the audited region");
    }
  }

  AuditReport report;
  const std::vector<std::size_t> outside = complement(n, region);

  // (a) Heisenberg: remote strings are fixed points of the conjugation.
  report.heisenberg_pass = true;
  if (!outside.empty()) {
    for (const PauliString& s : strings_supported_on(n, outside)) {
      ++report.heisenberg_checked;
      PauliString moved = PauliString::identity(n);
      const bool single = conjugate_string(s, g, ConjugationDirection::Heisenberg)
                              .as_single_string(moved);
      if (!single || !(moved == s)) {
        report.heisenberg_pass = false;
        report.moved_observables.push_back(s.str());
      }
    }
  }

  // (b) product form: changes must be attributable to the gate.
  const FactoredState before = evolve(initial, history);
  const FactoredState after = evolve(before, g);
  report.changed = changed_factors(before, after);
  report.provenance_ok = true;
  for (std::size_t j : report.changed) {
    if (!intersects(before.generator(j).support(), g.support)) {
      report.unattributed.push_back(j);
    }
    const auto& records = after.provenance()[j];
    if (records.empty() || !(records.back().gate == g) ||
        records.back().seq != after.gates_applied()) {
      report.provenance_ok = false;
    }
  }
  for (std::size_t j = 0; j < before.factor_count(); ++j) {
    if (std::find(report.changed.begin(), report.changed.end(), j) == report.changed.end() &&
        after.provenance()[j] != before.provenance()[j]) {
      report.provenance_ok = false;  // an unchanged factor picked up a record
    }
  }
  report.product_pass = report.unattributed.empty() && report.provenance_ok;

  // (c) Schrodinger: the remote reduced state does not move.
  report.schrodinger_pass = true;
  if (!outside.empty()) {
    const StateVector psi =
        prepared ? *prepared : run_circuit(history, factored_statevector(initial));
    const StateVector kicked = apply_gate(psi, g);
    report.reduced_deviation = dense::max_abs_diff(reduced_density_matrix(psi, outside),
                                                   reduced_density_matrix(kicked, outside));
    report.schrodinger_pass = report.reduced_deviation <= kReducedStateTol;
  }
  return report;
}

DataHidingReport data_hiding_check(const std::vector<double>& phi_grid) {
  if (phi_grid.empty()) {
    throw std::invalid_argument("phi grid must be nonempty");
  }
  DataHidingReport report;
  for (double phi : phi_grid) {
    DataHidingReport::Entry entry;
    entry.phi = phi;
    entry.bell_deviation = max_deviation_from_mixed(bell_phase_state(phi));
    entry.entangler_deviation = max_deviation_from_mixed(entangler_phase_state(phi));
    report.max_deviation =
        std::max({report.max_deviation, entry.bell_deviation, entry.entangler_deviation});
    report.entries.push_back(entry);
  }
  report.pass = report.max_deviation <= kReducedStateTol;
  return report;
}

Json DataHidingReport::to_json() const {
  Json out;
  out["pass"] = pass;
  out["max_deviation"] = max_deviation;
  Json list = Json::array();
  for (const Entry& e : entries) {
    list.push_back({{"phi", e.phi},
                    {"bell_deviation", e.bell_deviation},
                    {"entangler_deviation", e.entangler_deviation}});
  }
  out["entries"] = std::move(list);
  return out;
}

BlochVector BlochVector::random(Rng& rng) {
  auto [x, y, z] = rng.unit_vector3();
  return {x, y, z};
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

PauliSum BlochVector::observable(std::size_t n, std::size_t qubit) const {
  if (std::abs(norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("measurement setting must be a unit vector");
  }
  PauliSum obs(n);
  obs.add_term(PauliString::single(n, qubit, Letter::X), x);
  obs.add_term(PauliString::single(n, qubit, Letter::Y), y);
  obs.add_term(PauliString::single(n, qubit, Letter::Z), z);
  return obs;
}

double correlation(const StateVector& state, const BlochVector& a, const BlochVector& b) {
  if (state.num_qubits() != 2) {
    throw std::invalid_argument("CHSH needs a two-qubit state");
  }
  return expectation(state, a.observable(2, 0) * b.observable(2, 1)).real();
}

double chsh_value(const StateVector& state, const BlochVector& a, const BlochVector& a_alt,
                  const BlochVector& b, const BlochVector& b_alt) {
  return correlation(state, a, b) + correlation(state, a, b_alt) +
         correlation(state, a_alt, b) - correlation(state, a_alt, b_alt);
}

ChshSettings optimal_chsh_settings() {
  const double inv = 1.0 / std::sqrt(2.0);
  return {
      {0.0, 0.0, 1.0},    // a = Z
      {1.0, 0.0, 0.0},    // a' = X
      {inv, 0.0, inv},    // b = (Z + X)/sqrt(2)
      {-inv, 0.0, inv},   // b' = (Z - X)/sqrt(2)
  };
}

IndistinguishabilityReport indistinguishability_check(
    const Circuit& c1, const Circuit& c2, const StateVector& initial,
    const std::optional<FactoredState>& factored_initial) {
  if (c1.n != c2.n || c1.n != initial.num_qubits()) {
    throw std::invalid_argument("circuits and state must share the qubit count");
  }
  IndistinguishabilityReport report;
  report.circuits_differ = !(c1 == c2);

  const StateVector final1 = run_circuit(c1, initial);
  const StateVector final2 = run_circuit(c2, initial);
  report.overlap = overlap_magnitude(final1, final2);
  report.states_equal = equal_up_to_global_phase(final1, final2);

  if (factored_initial) {
    const FactoredState f1 = evolve(*factored_initial, c1);
    const FactoredState f2 = evolve(*factored_initial, c2);
    report.provenance_a = f1.str();
    report.provenance_b = f2.str();
    report.provenance_differs = f1.provenance() != f2.provenance();
    const PauliSum e1 = expand(f1);
    const PauliSum e2 = expand(f2);
    report.expanded_diff = e1.max_term_diff(e2);
    report.expanded_equal = e1.approx_equal(e2, kZeroTol);
  }

  report.pass = report.states_equal && report.circuits_differ;
  return report;
}

Json IndistinguishabilityReport::to_json() const {
  Json out;
  out["pass"] = pass;
  out["circuits_differ"] = circuits_differ;
  out["states_equal_up_to_phase"] = states_equal;
  out["overlap"] = overlap;
  out["provenance_differs"] = provenance_differs;
  out["expanded_equal"] = expanded_equal;
  out["expanded_diff"] = expanded_diff;
  out["provenance_a"] = provenance_a;
  out["provenance_b"] = provenance_b;
  return out;
}

}  // namespace qpic::locality
