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

#include "qpic/gates.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qpic {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::Phase: return "PHASE";
    case GateKind::CZ: return "CZ";
    case GateKind::CX: return "CX";
  }
  throw std::logic_error("bad GateKind");
}

std::size_t gate_arity(GateKind kind) {
  return (kind == GateKind::CZ || kind == GateKind::CX) ? 2 : 1;
}

void GateOp::validate(std::size_t n) const {
  if (support.size() != gate_arity(kind)) {
    throw std::invalid_argument(std::string(gate_name(kind)) + " takes " +
                                std::to_string(gate_arity(kind)) + " qubit(s)");
  }
  for (std::size_t q : support) {
    if (q >= n) {
      throw std::invalid_argument("gate qubit " + std::to_string(q) +
                                  " out of range for " + std::to_string(n) + " qubits");
    }
  }
  if (support.size() == 2 && support[0] == support[1]) {
    throw std::invalid_argument("two-qubit gate needs distinct qubits");
  }
}

GateOp GateOp::inverse() const {
  switch (kind) {
    case GateKind::S: return GateOp::phase(support[0], -M_PI / 2.0);
    case GateKind::Phase: return GateOp::phase(support[0], -phi);
    default: return *this;  // H, X, Y, Z, CZ, CX are involutions
  }
}

dense::Matrix GateOp::local_unitary() const {
  const Complex i{0.0, 1.0};
  dense::Matrix m;
  switch (kind) {
    case GateKind::H:
      m.resize(2, 2);
      m << 1, 1, 1, -1;
      m /= std::sqrt(2.0);
      return m;
    case GateKind::S:
      m.resize(2, 2);
      m << 1, 0, 0, i;
      return m;
    case GateKind::X: return dense::letter_matrix(Letter::X);
    case GateKind::Y: return dense::letter_matrix(Letter::Y);
    case GateKind::Z: return dense::letter_matrix(Letter::Z);
    case GateKind::Phase:
      m.resize(2, 2);
      m << 1, 0, 0, std::exp(i * phi);
      return m;
    case GateKind::CZ:
      m = dense::Matrix::Identity(4, 4);
      m(3, 3) = -1;
      return m;
    case GateKind::CX:
      m = dense::Matrix::Zero(4, 4);
      m(0, 0) = 1;
      m(1, 1) = 1;
      m(2, 3) = 1;
      m(3, 2) = 1;
      return m;
  }
  throw std::logic_error("bad GateKind");
}

dense::Matrix GateOp::full_unitary(std::size_t n) const {
  validate(n);
  if (n > kDenseCap) {
    throw std::invalid_argument("dense unitary capped at " + std::to_string(kDenseCap) +
                                " qubits");
  }
  const dense::Matrix local = local_unitary();
  const auto dim = static_cast<Eigen::Index>(1) << n;
  dense::Matrix out = dense::Matrix::Zero(dim, dim);
  const std::size_t k = support.size();
  // Place each |r><c| block of the local matrix via Kronecker factors.
  for (Eigen::Index r = 0; r < local.rows(); ++r) {
    for (Eigen::Index c = 0; c < local.cols(); ++c) {
      if (local(r, c) == Complex{0.0, 0.0}) continue;
      dense::Matrix term(1, 1);
      term(0, 0) = local(r, c);
      for (std::size_t q = 0; q < n; ++q) {
        dense::Matrix factor;
        auto slot = std::find(support.begin(), support.end(), q);
        if (slot == support.end()) {
          factor = dense::Matrix::Identity(2, 2);
        } else {
          // support[j] owns bit (k-1-j) of the local row/column index
          const auto j = static_cast<std::size_t>(slot - support.begin());
          const int rb = (r >> (k - 1 - j)) & 1;
          const int cb = (c >> (k - 1 - j)) & 1;
          factor = dense::Matrix::Zero(2, 2);
          factor(rb, cb) = 1;
        }
        term = dense::kron(term, factor);
      }
      out += term;
    }
  }
  return out;
}

std::string GateOp::str() const {
  std::string out{gate_name(kind)};
  for (std::size_t q : support) {
    out += " " + std::to_string(q);
  }
  if (kind == GateKind::Phase) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), " %.17g", phi);
    out += buf;
  }
  return out;
}

bool GateOp::operator==(const GateOp& other) const {
  return kind == other.kind && support == other.support &&
         (kind != GateKind::Phase || phi == other.phi);
}

Circuit::Circuit(std::size_t n, std::vector<GateOp> gates) : n(n), gates(std::move(gates)) {
  for (const GateOp& g : this->gates) g.validate(n);
}

Circuit& Circuit::append(GateOp g) {
  g.validate(n);
  gates.push_back(std::move(g));
  return *this;
}

std::string Circuit::str() const {
  std::string out = "qubits " + std::to_string(n) + "\n";
  for (const GateOp& g : gates) {
    out += g.str() + "\n";
  }
  return out;
}

namespace {

[[noreturn]] void line_fail(std::size_t line_no, const std::string& what) {
  throw std::invalid_argument("circuit line " + std::to_string(line_no) + ": " + what);
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) {
        fields.push_back(cur);
        cur.clear();
      }
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) fields.push_back(cur);
  return fields;
}

std::size_t parse_index(const std::string& field, std::size_t line_no) {
  if (field.empty() || !std::all_of(field.begin(), field.end(), [](unsigned char c) {
        return std::isdigit(c);
      })) {
    line_fail(line_no, "bad qubit index '" + field + "'");
  }
  try {
    return static_cast<std::size_t>(std::stoull(field));
  } catch (const std::exception&) {
    line_fail(line_no, "bad qubit index '" + field + "'");
  }
}

double parse_angle(const std::string& field, std::size_t line_no) {
  try {
    std::size_t used = 0;
    double v = std::stod(field, &used);
    if (used != field.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    line_fail(line_no, "bad angle '" + field + "'");
  }
}

}  // namespace

Circuit Circuit::parse(std::string_view text) {
  std::vector<GateOp> gates;
  std::optional<std::size_t> declared_n;
  std::size_t max_index = 0;
  bool saw_index = false;

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_fields(line);
    if (fields.empty()) continue;

    std::string head = fields[0];
    std::transform(head.begin(), head.end(), head.begin(),
                   [](unsigned char c) { return std::toupper(c); });

    if (head == "QUBITS") {
      if (fields.size() != 2) line_fail(line_no, "qubits directive takes one count");
      if (declared_n) line_fail(line_no, "duplicate qubits directive");
      declared_n = parse_index(fields[1], line_no);
      if (*declared_n == 0) line_fail(line_no, "qubit count must be positive");
      continue;
    }

    GateOp g;
    if (head == "H") g.kind = GateKind::H;
    else if (head == "S") g.kind = GateKind::S;
    else if (head == "X") g.kind = GateKind::X;
    else if (head == "Y") g.kind = GateKind::Y;
    else if (head == "Z") g.kind = GateKind::Z;
    else if (head == "PHASE") g.kind = GateKind::Phase;
    else if (head == "CZ") g.kind = GateKind::CZ;
    else if (head == "CX") g.kind = GateKind::CX;
    else line_fail(line_no, "unknown gate '" + fields[0] + "'");

    const std::size_t arity = gate_arity(g.kind);
    const std::size_t expected = 1 + arity + (g.kind == GateKind::Phase ? 1 : 0);
    if (fields.size() != expected) {
      line_fail(line_no, std::string(gate_name(g.kind)) + " expects " +
                             std::to_string(expected - 1) + " argument(s)");
    }
    for (std::size_t a = 0; a < arity; ++a) {
      std::size_t q = parse_index(fields[1 + a], line_no);
      g.support.push_back(q);
      max_index = std::max(max_index, q);
      saw_index = true;
    }
    if (g.kind == GateKind::Phase) {
      g.phi = parse_angle(fields.back(), line_no);
    }
    if (g.support.size() == 2 && g.support[0] == g.support[1]) {
      line_fail(line_no, "two-qubit gate needs distinct qubits");
    }
    gates.push_back(std::move(g));
  }

  std::size_t n = declared_n.value_or(saw_index ? max_index + 1 : 1);
  Circuit circuit;
  circuit.n = n;
  for (auto& g : gates) {
    g.validate(n);  // throws when the declared count is too small
    circuit.gates.push_back(std::move(g));
  }
  return circuit;
}

}  // namespace qpic
