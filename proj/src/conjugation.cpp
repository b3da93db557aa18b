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

#include "qpic/conjugation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qpic {

namespace {

#ifdef QPIC_MUTATION_CZ_SIGN
// Deliberate fault injection for the CLI mutation test: flips the sign of
// the CZ image X_a -> X_a Z_b. Never defined in regular builds.
constexpr int kCzMutationPhase = 2;
#else
constexpr int kCzMutationPhase = 0;
#endif

// Images of the generators X_q and Z_q under single-gate conjugation.
// All gates here are involutions except S, whose X image flips sign
// between the two directions.
PauliString image_x(const GateOp& g, std::size_t n, std::size_t q, ConjugationDirection dir) {
  switch (g.kind) {
    case GateKind::H: return PauliString::single(n, q, Letter::Z);
    case GateKind::S: {
      const bool heisenberg = dir == ConjugationDirection::Heisenberg;
      return PauliString::single(n, q, Letter::Y, heisenberg ? 2 : 0);
    }
    case GateKind::X: return PauliString::single(n, q, Letter::X);
    case GateKind::Y: return PauliString::single(n, q, Letter::X, 2);
    case GateKind::Z: return PauliString::single(n, q, Letter::X, 2);
    case GateKind::CZ: {
      const std::size_t other = g.support[0] == q ? g.support[1] : g.support[0];
      PauliString result = PauliString::single(n, q, Letter::X, kCzMutationPhase);
      return result.with_letter(other, Letter::Z);
    }
    case GateKind::CX: {
      if (q == g.support[0]) {  // control: X_c -> X_c X_t
        return PauliString::single(n, q, Letter::X).with_letter(g.support[1], Letter::X);
      }
      return PauliString::single(n, q, Letter::X);  // target: X_t fixed
    }
    case GateKind::Phase:
      throw std::logic_error("PHASE has no single-string X image");
  }
  throw std::logic_error("bad GateKind");
}

PauliString image_z(const GateOp& g, std::size_t n, std::size_t q, ConjugationDirection) {
  switch (g.kind) {
    case GateKind::H: return PauliString::single(n, q, Letter::X);
    case GateKind::S: return PauliString::single(n, q, Letter::Z);
    case GateKind::X: return PauliString::single(n, q, Letter::Z, 2);
    case GateKind::Y: return PauliString::single(n, q, Letter::Z, 2);
    case GateKind::Z: return PauliString::single(n, q, Letter::Z);
    case GateKind::CZ: return PauliString::single(n, q, Letter::Z);
    case GateKind::CX: {
      if (q == g.support[1]) {  // target: Z_t -> Z_c Z_t
        return PauliString::single(n, q, Letter::Z).with_letter(g.support[0], Letter::Z);
      }
      return PauliString::single(n, q, Letter::Z);  // control: Z_c fixed
    }
    case GateKind::Phase:
      throw std::logic_error("PHASE has no single-string Z image");
  }
  throw std::logic_error("bad GateKind");
}

}  // namespace

bool is_clifford(const GateOp& g) { return g.kind != GateKind::Phase; }

PauliString conjugate_string_clifford(const PauliString& p, const GateOp& g,
                                      ConjugationDirection dir) {
  const std::size_t n = p.num_qubits();
  g.validate(n);
  if (!is_clifford(g)) {
    throw std::invalid_argument("PHASE conjugation does not stay in the string group");
  }
  // Decompose letterwise as Y = i X Z, push the generators on the gate's
  // support through it, and multiply the images back together with exact
  // phases. Letters off the support pass through untouched.
  PauliString result = PauliString::identity(n).with_phase_exp(p.phase_exp());
  for (std::size_t q = 0; q < n; ++q) {
    const Letter l = p.letter(q);
    if (l == Letter::I) continue;
    const bool on_support =
        std::find(g.support.begin(), g.support.end(), q) != g.support.end();
    const bool has_x = l == Letter::X || l == Letter::Y;
    const bool has_z = l == Letter::Z || l == Letter::Y;
    if (l == Letter::Y) {
      result = result.with_phase_exp(result.phase_exp() + 1);
    }
    if (has_x) {
      result = result * (on_support ? image_x(g, n, q, dir)
                                    : PauliString::single(n, q, Letter::X));
    }
    if (has_z) {
      result = result * (on_support ? image_z(g, n, q, dir)
                                    : PauliString::single(n, q, Letter::Z));
    }
  }
  return result;
}

PauliSum conjugate_string(const PauliString& p, const GateOp& g, ConjugationDirection dir) {
  const std::size_t n = p.num_qubits();
  g.validate(n);
  if (is_clifford(g)) {
    return PauliSum::from_string(conjugate_string_clifford(p, g, dir));
  }

  const std::size_t q = g.support[0];
  // Heisenberg: X -> cos X - sin Y, Y -> sin X + cos Y; Schrodinger flips
  // the sign of sin. Z and I are untouched by a diagonal kick.
  const double c = std::cos(g.phi);
  const double s = dir == ConjugationDirection::Heisenberg ? std::sin(g.phi) : -std::sin(g.phi);
  PauliSum result(n);
  switch (p.letter(q)) {
    case Letter::I:
    case Letter::Z:
      result.add_term(p);
      break;
    case Letter::X:
      result.add_term(p, c);
      result.add_term(p.with_letter(q, Letter::Y), -s);
      break;
    case Letter::Y:
      result.add_term(p.with_letter(q, Letter::X), s);
      result.add_term(p, c);
      break;
  }
  return result;
}

PauliSum conjugate(const PauliSum& obs, const GateOp& g, ConjugationDirection dir) {
  g.validate(obs.num_qubits());
  PauliSum result(obs.num_qubits());
  for (const auto& [word, coeff] : obs.terms()) {
    std::vector<Letter> letters;
    letters.reserve(word.size());
    for (char ch : word) letters.push_back(letter_from_char(ch));
    PauliSum moved = conjugate_string(PauliString(std::move(letters)), g, dir);
    result = result + coeff * moved;
  }
  return result;
}

PauliSum conjugate(const PauliSum& obs, const Circuit& c, ConjugationDirection dir) {
  if (c.n != obs.num_qubits()) {
    throw std::invalid_argument("circuit and observable qubit counts differ");
  }
  PauliSum result = obs;
  if (dir == ConjugationDirection::Heisenberg) {
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
      result = conjugate(result, *it, dir);
    }
  } else {
    for (const GateOp& g : c.gates) {
      result = conjugate(result, g, dir);
    }
  }
  return result;
}

}  // namespace qpic
