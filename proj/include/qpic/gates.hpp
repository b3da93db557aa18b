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
#include <string_view>
#include <vector>

#include "qpic/dense.hpp"
#include "qpic/pauli.hpp"

namespace qpic {

enum class GateKind { H, S, X, Y, Z, Phase, CZ, CX };

std::string_view gate_name(GateKind kind);
std::size_t gate_arity(GateKind kind);

/// A named unitary with explicit qubit support. Phase is the single-qubit
/// kick diag(1, e^{i phi}); CZ/CX take (first, second) = (control, target).
struct GateOp {
  GateKind kind;
  std::vector<std::size_t> support;  // distinct, in range, ordered
  double phi = 0.0;                  // Phase only

  static GateOp h(std::size_t q) { return {GateKind::H, {q}}; }
  static GateOp s(std::size_t q) { return {GateKind::S, {q}}; }
  static GateOp x(std::size_t q) { return {GateKind::X, {q}}; }
  static GateOp y(std::size_t q) { return {GateKind::Y, {q}}; }
  static GateOp z(std::size_t q) { return {GateKind::Z, {q}}; }
  static GateOp phase(std::size_t q, double phi) { return {GateKind::Phase, {q}, phi}; }
  static GateOp cz(std::size_t a, std::size_t b) { return {GateKind::CZ, {a, b}}; }
  static GateOp cx(std::size_t control, std::size_t target) {
    return {GateKind::CX, {control, target}};
  }

  /// Throws if the support is malformed or does not fit n qubits.
  void validate(std::size_t n) const;

  GateOp inverse() const;

  /// Local unitary on the support (2x2 or 4x4, support[0] as the left factor).
  dense::Matrix local_unitary() const;

  /// Full 2^n unitary, built by Kronecker placement (oracle path).
  dense::Matrix full_unitary(std::size_t n) const;

  /// Circuit-file line form, e.g. "CZ 0 1" or "PHASE 0 3.14159...".
  std::string str() const;

  bool operator==(const GateOp& other) const;
};

/// An ordered gate list; the explicit dynamics record.
struct Circuit {
  std::size_t n = 1;
  std::vector<GateOp> gates;

  Circuit() = default;
  Circuit(std::size_t n, std::vector<GateOp> gates);

  Circuit& append(GateOp g);

  /// One gate per line; "qubits N" header first.
  std::string str() const;

  /// Parses the line-oriented circuit text. Grammar:
  ///   - optional "qubits N" directive (otherwise N = max index + 1)
  ///   - one gate per line: "H q" | "S q" | "X q" | "Y q" | "Z q"
  ///     | "PHASE q phi" | "CZ a b" | "CX control target"
  ///   - blank lines and "#" comments ignored
  /// Errors name the offending 1-based line.
  static Circuit parse(std::string_view text);

  bool operator==(const Circuit& other) const = default;
};

}  // namespace qpic
